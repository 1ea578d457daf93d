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

#include "xmamimo/geometry.hpp"

#include <cmath>

namespace xmamimo {

std::vector<Point> antenna_positions(const SystemConfig& config) {
  config.validate();
  const int m = config.antennas;
  std::vector<Point> points(static_cast<std::size_t>(m));
  if (m == 1) {
    points[0] = {config.array_length / 2.0, 0.0};
    return points;
  }
  const double spacing = config.array_length / static_cast<double>(m - 1);
  for (int i = 0; i < m; ++i) {
    points[static_cast<std::size_t>(i)] = {spacing * static_cast<double>(i), 0.0};
  }
  return points;
}

UserLayout place_users(const SystemConfig& config, Rng& rng) {
  config.validate();
  UserLayout layout;
  layout.positions.reserve(static_cast<std::size_t>(config.users));
  for (int k = 0; k < config.users; ++k) {
    layout.positions.push_back(
        {rng.uniform(0.0, config.array_length), config.user_standoff});
  }
  return layout;
}

RealMatrix distances(const UserLayout& layout, const std::vector<Point>& antennas) {
  const auto rows = static_cast<Eigen::Index>(antennas.size());
  const auto cols = static_cast<Eigen::Index>(layout.positions.size());
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("distances: empty antenna or user set");
  }
  RealMatrix d(rows, cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    const Point& user = layout.positions[static_cast<std::size_t>(k)];
    for (Eigen::Index m = 0; m < rows; ++m) {
      const Point& ant = antennas[static_cast<std::size_t>(m)];
      d(m, k) = std::hypot(user.x - ant.x, user.y - ant.y);
    }
  }
  return d;
}

}  // namespace xmamimo
