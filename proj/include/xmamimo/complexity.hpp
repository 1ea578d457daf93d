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

#include <cstdint>
#include <string>
#include <vector>

namespace xmamimo {

/// Per-trial complex-multiplication counter. Detection routines take an
/// optional CostMeter*; passing nullptr disables all accounting. Meters are
/// owned by one trial's execution context and never shared across threads.
class CostMeter {
 public:
  void add(std::uint64_t n) { mults_ += n; }
  void reset() { mults_ = 0; }
  std::uint64_t mults() const { return mults_; }

 private:
  std::uint64_t mults_ = 0;
};

// Complex-multiplication model charged for each linear-algebra primitive the
// detectors execute. Divisions and square roots count as one multiplication
// each. The QR count is the classic Householder figure m*n^2 - n^3/3
// (integer-truncated); applying the reflector sequence to one m-vector costs
// 2*m*n - n^2.
namespace cost {

inline std::uint64_t dot(std::uint64_t n) { return n; }
inline std::uint64_t norm2(std::uint64_t n) { return n; }
inline std::uint64_t scale(std::uint64_t n) { return n; }
inline std::uint64_t axpy(std::uint64_t n) { return n; }
inline std::uint64_t gemv(std::uint64_t m, std::uint64_t n) { return m * n; }
inline std::uint64_t householder_qr(std::uint64_t m, std::uint64_t n) {
  return m * n * n - (n * n * n) / 3;
}
inline std::uint64_t apply_reflectors(std::uint64_t m, std::uint64_t n) {
  return 2 * m * n - n * n;
}

}  // namespace cost

/// Closed-form multiplication count of the fused per-subarray receiver with
/// the per-antenna factor in the ordering/SNR term:
/// B*K^4 + B*K*M_b*(K-1) + B*K.
std::uint64_t dldf_cost(int subarrays, int users, int block_antennas);

/// Variant without the per-antenna factor in the middle term:
/// B*K^4 + B*K*(K-1) + B*K.
std::uint64_t dldf_cost_no_antenna_term(int subarrays, int users);

struct PeelCostBounds {
  std::uint64_t worst = 0;  // K^4 + K*M_b*(K-1)
  std::uint64_t best = 0;   // ceil(K^4/B^3) + ceil(K*M_b*K/B)
};

/// Worst/best-case multiplication counts of the peeling detector. The best
/// case assumes users split evenly across subarrays; fractional terms are
/// rounded up to integers.
PeelCostBounds peel_cost_bounds(int subarrays, int users, int block_antennas);

/// One row of the cost comparison emitted by the harness and the CLI.
struct CostReport {
  std::string method;
  std::uint64_t formula = 0;   // closed-form count
  std::uint64_t measured = 0;  // instrumented count
};

}  // namespace xmamimo
