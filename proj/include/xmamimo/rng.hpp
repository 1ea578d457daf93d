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
#include <random>

#include "xmamimo/types.hpp"

namespace xmamimo {

/// splitmix64 finalizer; full-period bijective mixer over 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent substream seed from a base seed and up to three
/// stream coordinates (e.g. sweep point, trial index, purpose tag). The
/// derivation is order-sensitive so (a,b) and (b,a) give unrelated streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a = 0,
                          std::uint64_t b = 0, std::uint64_t c = 0);

/// Deterministic random stream. State is explicit and never shared: callers
/// construct one Rng per trial (or per purpose within a trial) from
/// derive_seed so concurrent trials reproduce bit-identical results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal.
  double gaussian();
  /// Circularly-symmetric complex Gaussian, unit total variance
  /// (variance 1/2 per real component).
  Complex cgaussian();
  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Fair bit.
  int bit();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace xmamimo
