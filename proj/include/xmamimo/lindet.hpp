// xmamimo -- subarray receiver library for extremely large aperture massive MIMO
// Copyright (C) 2026 the xmamimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include "xmamimo/channel.hpp"
#include "xmamimo/complexity.hpp"
#include "xmamimo/modem.hpp"
#include "xmamimo/types.hpp"

namespace xmamimo {

// Relative singular-value cutoff below which an interference set is declared
// rank-deficient and zero-forcing infeasible.
inline constexpr double kRankRelTol = 1e-10;

/// Zero-forcing receiver row for one user: unit gain toward the user's own
/// column, zero toward every other column of the matrix it was built from.
struct ZfReceiver {
  CRowVector row;
};

/// The rho-free core shared by the receiver row, the post-SNR and the soft
/// estimate: the user's column projected onto the orthogonal complement of
/// the other columns, plus its squared norm. Computed from a column-pivoted
/// QR of the interference set, never an explicit Gram inverse. With a single
/// column the projector is the identity (matched filter). Throws
/// InfeasibleError when the matrix is wider than tall or the interference set
/// is rank-deficient at kRankRelTol.
struct ZfComponent {
  CVector projected;  // P_perp h_k
  double gain = 0.0;  // |P_perp h_k|^2 = h_k^H P_perp h_k
};
ZfComponent zf_component(const CMatrix& channel, int user, CostMeter* meter = nullptr);

/// Receiver row built from the projected column: row = projected^H / gain.
ZfReceiver zf_receiver(const CMatrix& channel, int user, CostMeter* meter = nullptr);

/// Post-processing SNR of the zero-forcing receiver: rho times the squared
/// norm of the projected user column. Strictly positive whenever feasible;
/// +infinity when rho is infinite (noiseless runs).
double zf_post_snr(const CMatrix& channel, int user, double rho,
                   CostMeter* meter = nullptr);

/// Applies the user's zero-forcing row to one received block:
/// soft = F_zf[channel] * received.
Complex subarray_soft(const CMatrix& channel, const CVector& received, int user,
                      CostMeter* meter = nullptr);

/// Fusion weights proportional to per-subarray SNR, normalized to sum to one.
/// These minimize the fused mean squared error over the probability simplex.
/// All SNRs must be positive and finite.
RealVector dldf_weights(const RealVector& subarray_snr);

/// Centralized zero-forcing over the whole array.
struct ZfDetection {
  CVector soft;                          // K soft symbols
  std::vector<SymbolDecision> decisions; // K hard decisions
};
ZfDetection detect_zf(const CMatrix& channel, const CVector& received,
                      CostMeter* meter = nullptr);

/// Distributed linear data fusion: per-subarray zero-forcing softs combined
/// with SNR-proportional weights.
struct DldfDetection {
  CMatrix subarray_soft;    // B x K
  RealMatrix subarray_snr;  // B x K, rho * projected gain
  RealMatrix weights;       // B x K, columns sum to one
  CVector fused;            // K
  RealVector fused_snr;     // K, sum of per-subarray SNRs
  std::vector<SymbolDecision> decisions;
};

/// Runs zero-forcing per subarray for every user, fuses the soft symbols with
/// weights proportional to the per-subarray projected gains (equivalently the
/// per-subarray SNRs; the noise level cancels in the normalization, so the
/// weights stay defined for noiseless input) and hard-decides the fused
/// values. Throws InfeasibleError naming the first infeasible subarray.
DldfDetection detect_dldf(const CMatrix& channel, const CVector& received,
                          const SubarrayPartition& partition, double rho,
                          CostMeter* meter = nullptr);

}  // namespace xmamimo
