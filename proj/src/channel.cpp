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

#include "xmamimo/channel.hpp"

#include <cmath>
#include <string>

namespace xmamimo {

int SubarrayPartition::total() const {
  int n = 0;
  for (const auto& list : antennas) n += static_cast<int>(list.size());
  return n;
}

RealMatrix large_scale_gains(const RealMatrix& dist, double beta, double gamma) {
  if (beta <= 0.0) {
    throw std::invalid_argument("large_scale_gains: beta must be positive");
  }
  if ((dist.array() <= 0.0).any()) {
    throw std::invalid_argument(
        "large_scale_gains: degenerate geometry (zero distance)");
  }
  return beta * dist.array().pow(-gamma);
}

RealMatrix normalize_gain_columns(const RealMatrix& gains) {
  RealMatrix out = gains;
  for (Eigen::Index k = 0; k < out.cols(); ++k) {
    const double mean = out.col(k).mean();
    if (mean <= 0.0) {
      throw std::invalid_argument("normalize_gain_columns: zero-power column");
    }
    out.col(k) /= mean;
  }
  return out;
}

ChannelMatrix draw_channel(const RealMatrix& gains, Rng& rng) {
  if ((gains.array() <= 0.0).any()) {
    throw std::invalid_argument("draw_channel: gains must be strictly positive");
  }
  ChannelMatrix ch;
  ch.gains = gains;
  ch.response.resize(gains.rows(), gains.cols());
  for (Eigen::Index k = 0; k < gains.cols(); ++k) {
    for (Eigen::Index m = 0; m < gains.rows(); ++m) {
      ch.response(m, k) = std::sqrt(gains(m, k)) * rng.cgaussian();
    }
  }
  return ch;
}

SubarrayPartition make_partition(int antennas, int subarrays, PartitionMode mode) {
  if (antennas < 1 || subarrays < 1) {
    throw std::invalid_argument("make_partition: counts must be positive");
  }
  if (subarrays > antennas || antennas % subarrays != 0) {
    throw std::invalid_argument(
        "make_partition: subarray count " + std::to_string(subarrays) +
        " does not evenly divide " + std::to_string(antennas) + " antennas");
  }
  const int per = antennas / subarrays;
  SubarrayPartition partition;
  partition.antennas.assign(static_cast<std::size_t>(subarrays), {});
  for (auto& list : partition.antennas) list.reserve(static_cast<std::size_t>(per));
  if (mode == PartitionMode::contiguous) {
    for (int b = 0; b < subarrays; ++b) {
      for (int i = 0; i < per; ++i) {
        partition.antennas[static_cast<std::size_t>(b)].push_back(b * per + i);
      }
    }
  } else {
    for (int m = 0; m < antennas; ++m) {
      partition.antennas[static_cast<std::size_t>(m % subarrays)].push_back(m);
    }
  }
  return partition;
}

namespace {

void check_block_args(Eigen::Index rows, const SubarrayPartition& partition, int b) {
  if (b < 0 || b >= partition.count()) {
    throw std::out_of_range("block: subarray index " + std::to_string(b) +
                            " out of range [0, " + std::to_string(partition.count()) + ")");
  }
  if (partition.total() != static_cast<int>(rows)) {
    throw std::invalid_argument("block: partition covers " +
                                std::to_string(partition.total()) + " antennas, input has " +
                                std::to_string(rows) + " rows");
  }
}

}  // namespace

CMatrix block(const CMatrix& full, const SubarrayPartition& partition, int b) {
  check_block_args(full.rows(), partition, b);
  const auto& rows = partition.antennas[static_cast<std::size_t>(b)];
  CMatrix out(static_cast<Eigen::Index>(rows.size()), full.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = full.row(rows[i]);
  }
  return out;
}

CVector block(const CVector& full, const SubarrayPartition& partition, int b) {
  check_block_args(full.rows(), partition, b);
  const auto& rows = partition.antennas[static_cast<std::size_t>(b)];
  CVector out(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = full(rows[i]);
  }
  return out;
}

}  // namespace xmamimo
