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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xmamimo/rng.hpp"
#include "xmamimo/types.hpp"

namespace xmamimo {

/// Unit-modulus 8-PSK constellation with binary-reflected Gray labels.
/// Point with angle index n sits at exp(i*2*pi*n/8) and carries label
/// n ^ (n >> 1), so neighbouring points differ in exactly one bit. The point
/// at angle 0 carries label 0; no rotation offset is applied.
class Constellation {
 public:
  static const Constellation& psk8();

  int order() const { return 8; }
  int bits_per_symbol() const { return 3; }

  /// Point at angle index n (not at label n).
  Complex point(int angle_index) const { return points_[static_cast<std::size_t>(angle_index)]; }
  /// Gray label of the point at angle index n.
  int label_at(int angle_index) const { return labels_[static_cast<std::size_t>(angle_index)]; }
  /// The point carrying the given 3-bit label.
  Complex point_for_label(int label) const;

  /// One line per point: "<angle_index> <label_bits> <re> <im>".
  std::string table_text() const;

 private:
  Constellation();
  std::array<Complex, 8> points_;
  std::array<int, 8> labels_;
  std::array<int, 8> angle_for_label_;
};

/// Nearest constellation point and its bit label; exact distance ties go to
/// the lower label value. Bits are most-significant first.
struct SymbolDecision {
  Complex point;
  int label = 0;
  std::array<std::uint8_t, 3> bits{};
};

/// Maps a bit string (length divisible by 3, MSB-first per symbol) to 8-PSK
/// symbols.
CVector modulate(std::span<const std::uint8_t> bits);

/// Adds i.i.d. circularly-symmetric complex Gaussian noise of total variance
/// sigma2 per entry. sigma2 = 0 returns the input exactly while still
/// advancing the RNG stream by the same amount.
CVector awgn(const CVector& clean, double sigma2, Rng& rng);

SymbolDecision hard_decision(Complex soft);

}  // namespace xmamimo
