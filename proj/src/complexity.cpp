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

#include "xmamimo/complexity.hpp"

#include <stdexcept>

namespace xmamimo {

namespace {

std::uint64_t checked(int v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string(name) + " must be positive");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

std::uint64_t dldf_cost(int subarrays, int users, int block_antennas) {
  const std::uint64_t b = checked(subarrays, "subarrays");
  const std::uint64_t k = checked(users, "users");
  const std::uint64_t mb = checked(block_antennas, "block_antennas");
  return b * k * k * k * k + b * k * mb * (k - 1) + b * k;
}

std::uint64_t dldf_cost_no_antenna_term(int subarrays, int users) {
  const std::uint64_t b = checked(subarrays, "subarrays");
  const std::uint64_t k = checked(users, "users");
  return b * k * k * k * k + b * k * (k - 1) + b * k;
}

PeelCostBounds peel_cost_bounds(int subarrays, int users, int block_antennas) {
  const std::uint64_t b = checked(subarrays, "subarrays");
  const std::uint64_t k = checked(users, "users");
  const std::uint64_t mb = checked(block_antennas, "block_antennas");
  PeelCostBounds bounds;
  bounds.worst = k * k * k * k + k * mb * (k - 1);
  bounds.best = ceil_div(k * k * k * k, b * b * b) + ceil_div(k * mb * k, b);
  return bounds;
}

}  // namespace xmamimo
