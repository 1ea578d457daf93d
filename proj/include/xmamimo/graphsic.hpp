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

#include <string>
#include <vector>

#include "xmamimo/channel.hpp"
#include "xmamimo/complexity.hpp"
#include "xmamimo/lindet.hpp"
#include "xmamimo/modem.hpp"
#include "xmamimo/rng.hpp"
#include "xmamimo/types.hpp"

namespace xmamimo {

/// User-to-subarray bipartite graph. incidence(b,k) = 1 when subarray b is in
/// user k's selected coverage set; edge_power holds the full per-subarray
/// received power of every user (selected or not), user_power its column sum.
struct BipartiteGraph {
  IntMatrix incidence;    // B x K, entries 0/1
  RealMatrix edge_power;  // B x K
  RealVector user_power;  // K
  RealVector covered;     // K, selected-power fraction, > p0 unless the
                          // positive-power subarrays were exhausted first

  int subarrays() const { return static_cast<int>(incidence.rows()); }
  int users() const { return static_cast<int>(incidence.cols()); }
};

/// Greedy coverage selection: for each user, subarrays are added in
/// decreasing captured-power order (ties to the lower subarray index) while
/// the accumulated power is at most p0 times the user's total power, skipping
/// zero-power subarrays. Throws on a user with zero total power.
BipartiteGraph build_graph(const CMatrix& channel, const SubarrayPartition& partition,
                           double p0, CostMeter* meter = nullptr);

struct Degrees {
  std::vector<int> subarray;  // S_b
  std::vector<int> user;      // U_k
};

/// Edge counts per node, restricted to the active (not-yet-detected) users.
Degrees node_degrees(const BipartiteGraph& graph, const std::vector<char>& active_user);
Degrees node_degrees(const BipartiteGraph& graph);

/// received - channel_column * symbol.
CVector subtract_interference(const CVector& received, const CVector& channel_column,
                              Complex symbol, CostMeter* meter = nullptr);

enum class PeelBranch { singleton, multiuser };

/// One detection event: the selected subarray, the users it resolved in SIC
/// order, and the post-processing SNR each user was detected at.
struct PeelEvent {
  int step = 0;
  int subarray = 0;
  PeelBranch branch = PeelBranch::singleton;
  std::vector<int> users;
  std::vector<double> snrs;
};

struct PeelingTrace {
  std::vector<PeelEvent> events;
  /// One event per line: "step=<n> subarray=<b> branch=<s|m> users=a,b snrs=x,y".
  std::string text() const;
};

struct PeelOptions {
  // Subtract the reconstructed hard symbol (default) or the raw soft value.
  bool soft_subtraction = false;
  // Recompute the SNR ordering after every in-subarray cancellation instead
  // of sorting once per event.
  bool resort_snr = true;
};

struct PeelDetection {
  std::vector<SymbolDecision> decisions;  // K
  CVector soft;                           // K, the value each user was detected from
  PeelingTrace trace;
};

/// Peeling + in-subarray SIC over the bipartite graph. Repeatedly selects the
/// minimum-degree subarray among those with undetected users (ties broken
/// uniformly at random with the supplied stream). A singleton subarray is
/// resolved with a matched filter on its residual; a higher-degree subarray
/// zero-forces its connected undetected users in decreasing post-SNR order,
/// cancelling each detected symbol from every subarray where the user has
/// channel energy. Throws InfeasibleError on an overloaded subarray (more
/// connected users than antennas) or a stalled graph.
PeelDetection peel_detect(const BipartiteGraph& graph, const CMatrix& channel,
                          const CVector& received, const SubarrayPartition& partition,
                          double rho, Rng& rng, const PeelOptions& options = {},
                          CostMeter* meter = nullptr);

}  // namespace xmamimo
