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

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// User positions: x uniform along the array, y fixed at the standoff
/// distance from the array line.
struct UserLayout {
  std::vector<Point> positions;
};

/// M points equispaced on the segment [0, array_length] along y = 0.
/// A single antenna sits at the segment midpoint.
std::vector<Point> antenna_positions(const SystemConfig& config);

/// Draws K user positions, x i.i.d. uniform on [0, array_length],
/// y = user_standoff.
UserLayout place_users(const SystemConfig& config, Rng& rng);

/// M x K matrix of Euclidean distances between antenna m and user k.
RealMatrix distances(const UserLayout& layout, const std::vector<Point>& antennas);

}  // namespace xmamimo
