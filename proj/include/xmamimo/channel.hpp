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

#include "xmamimo/rng.hpp"
#include "xmamimo/types.hpp"

namespace xmamimo {

/// Non-stationary channel: response(m,k) is the complex gain between antenna
/// m and user k, gains(m,k) the per-antenna large-scale power it was drawn
/// with. Column k is user k's array response.
struct ChannelMatrix {
  CMatrix response;  // H, M x K
  RealMatrix gains;  // W, M x K, all entries > 0
};

/// Disjoint ordered antenna-index lists, one per subarray, covering 0..M-1.
struct SubarrayPartition {
  std::vector<std::vector<int>> antennas;

  int count() const { return static_cast<int>(antennas.size()); }
  int size(int b) const { return static_cast<int>(antennas.at(static_cast<std::size_t>(b)).size()); }
  int total() const;
};

/// W(m,k) = beta * dist(m,k)^(-gamma). Distances must be strictly positive.
RealMatrix large_scale_gains(const RealMatrix& dist, double beta, double gamma);

/// Rescales each column of W to unit mean, removing the geometry dependence
/// of the average received power per user.
RealMatrix normalize_gain_columns(const RealMatrix& gains);

/// H(m,k) = sqrt(W(m,k)) * g with g a fresh CN(0,1) draw. Entries are drawn
/// column by column (per user), row-major within a column.
ChannelMatrix draw_channel(const RealMatrix& gains, Rng& rng);

/// Splits M antennas into B equal subarrays. Contiguous: subarray b owns
/// antennas [b*M/B, (b+1)*M/B). Interleaved: antenna m goes to subarray m mod B.
/// B must divide M.
SubarrayPartition make_partition(int antennas, int subarrays, PartitionMode mode);

/// Rows of the input restricted to subarray b's antennas, order preserved.
CMatrix block(const CMatrix& full, const SubarrayPartition& partition, int b);
CVector block(const CVector& full, const SubarrayPartition& partition, int b);

}  // namespace xmamimo
