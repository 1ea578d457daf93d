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

#include "xmamimo/modem.hpp"

#include <cmath>
#include <sstream>

namespace xmamimo {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Constellation::Constellation() {
  for (int n = 0; n < 8; ++n) {
    const double angle = kTwoPi * static_cast<double>(n) / 8.0;
    points_[static_cast<std::size_t>(n)] = Complex(std::cos(angle), std::sin(angle));
    const int label = n ^ (n >> 1);
    labels_[static_cast<std::size_t>(n)] = label;
    angle_for_label_[static_cast<std::size_t>(label)] = n;
  }
  points_[0] = Complex(1.0, 0.0);  // pin the anchor point exactly
}

const Constellation& Constellation::psk8() {
  static const Constellation table;
  return table;
}

Complex Constellation::point_for_label(int label) const {
  if (label < 0 || label >= order()) {
    throw std::invalid_argument("point_for_label: label out of range");
  }
  return points_[static_cast<std::size_t>(angle_for_label_[static_cast<std::size_t>(label)])];
}

std::string Constellation::table_text() const {
  std::ostringstream out;
  out.precision(17);
  for (int n = 0; n < order(); ++n) {
    const int label = label_at(n);
    out << n << ' ' << ((label >> 2) & 1) << ((label >> 1) & 1) << (label & 1) << ' '
        << point(n).real() << ' ' << point(n).imag() << '\n';
  }
  return out.str();
}

CVector modulate(std::span<const std::uint8_t> bits) {
  const auto& table = Constellation::psk8();
  if (bits.size() % 3 != 0) {
    throw std::invalid_argument("modulate: bit count " + std::to_string(bits.size()) +
                                " is not divisible by 3");
  }
  const auto symbols = static_cast<Eigen::Index>(bits.size() / 3);
  CVector x(symbols);
  for (Eigen::Index k = 0; k < symbols; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) * 3;
    for (std::size_t j = 0; j < 3; ++j) {
      if (bits[i + j] > 1) throw std::invalid_argument("modulate: bits must be 0 or 1");
    }
    const int label = (bits[i] << 2) | (bits[i + 1] << 1) | bits[i + 2];
    x(k) = table.point_for_label(label);
  }
  return x;
}

CVector awgn(const CVector& clean, double sigma2, Rng& rng) {
  if (sigma2 < 0.0) {
    throw std::invalid_argument("awgn: noise variance must be nonnegative");
  }
  const double scale = std::sqrt(sigma2);
  CVector noisy(clean.size());
  for (Eigen::Index i = 0; i < clean.size(); ++i) {
    noisy(i) = clean(i) + scale * rng.cgaussian();
  }
  return noisy;
}

SymbolDecision hard_decision(Complex soft) {
  if (!std::isfinite(soft.real()) || !std::isfinite(soft.imag())) {
    throw std::invalid_argument("hard_decision: non-finite soft symbol");
  }
  const auto& table = Constellation::psk8();
  int best_angle = 0;
  int best_label = table.order();
  double best_dist = std::numeric_limits<double>::infinity();
  for (int n = 0; n < table.order(); ++n) {
    const double dist = std::norm(soft - table.point(n));
    const int label = table.label_at(n);
    if (dist < best_dist || (dist == best_dist && label < best_label)) {
      best_dist = dist;
      best_angle = n;
      best_label = label;
    }
  }
  SymbolDecision d;
  d.point = table.point(best_angle);
  d.label = best_label;
  d.bits = {static_cast<std::uint8_t>((best_label >> 2) & 1),
            static_cast<std::uint8_t>((best_label >> 1) & 1),
            static_cast<std::uint8_t>(best_label & 1)};
  return d;
}

}  // namespace xmamimo
