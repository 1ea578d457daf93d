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

#include "xmamimo/lindet.hpp"

#include <cmath>
#include <string>

namespace xmamimo {

namespace {

void check_user_index(const CMatrix& channel, int user) {
  if (user < 0 || user >= channel.cols()) {
    throw std::out_of_range("user index " + std::to_string(user) + " out of range [0, " +
                            std::to_string(channel.cols()) + ")");
  }
}

// P_perp h_k: the component of the user's column orthogonal to the span of
// all other columns. Charges QR + two reflector applications to the meter.
CVector projected_column(const CMatrix& channel, int user, CostMeter* meter) {
  const Eigen::Index rows = channel.rows();
  const Eigen::Index cols = channel.cols();
  if (rows < cols) {
    throw InfeasibleError("ZF infeasible: " + std::to_string(rows) + " antennas for " +
                          std::to_string(cols) + " users");
  }
  CVector h = channel.col(user);
  if (cols == 1) return h;  // empty interference set: projector is the identity

  CMatrix others(rows, cols - 1);
  others.leftCols(user) = channel.leftCols(user);
  others.rightCols(cols - 1 - user) = channel.rightCols(cols - 1 - user);

  Eigen::ColPivHouseholderQR<CMatrix> qr(others);
  qr.setThreshold(kRankRelTol);
  if (qr.rank() < cols - 1) {
    throw InfeasibleError("ZF infeasible: interference columns rank-deficient");
  }
  CVector coeff = qr.householderQ().adjoint() * h;
  coeff.tail(rows - (cols - 1)).setZero();
  CVector within_span = qr.householderQ() * coeff;
  if (meter) {
    meter->add(cost::householder_qr(static_cast<std::uint64_t>(rows),
                                    static_cast<std::uint64_t>(cols - 1)) +
               2 * cost::apply_reflectors(static_cast<std::uint64_t>(rows),
                                          static_cast<std::uint64_t>(cols - 1)));
  }
  return h - within_span;
}

// Squared norm of the projected column with the feasibility check relative to
// the raw column norm.
double projected_gain(const CMatrix& channel, int user, const CVector& projected,
                      CostMeter* meter) {
  const double gain = projected.squaredNorm();
  if (meter) meter->add(cost::norm2(static_cast<std::uint64_t>(projected.size())));
  const double column_power = channel.col(user).squaredNorm();
  if (!(gain > kRankRelTol * kRankRelTol * column_power) || column_power == 0.0) {
    throw InfeasibleError("ZF infeasible: user column " + std::to_string(user) +
                          " lies in the interference span");
  }
  return gain;
}

}  // namespace

ZfComponent zf_component(const CMatrix& channel, int user, CostMeter* meter) {
  check_user_index(channel, user);
  ZfComponent component;
  component.projected = projected_column(channel, user, meter);
  component.gain = projected_gain(channel, user, component.projected, meter);
  return component;
}

ZfReceiver zf_receiver(const CMatrix& channel, int user, CostMeter* meter) {
  const ZfComponent component = zf_component(channel, user, meter);
  if (meter) {
    meter->add(cost::scale(static_cast<std::uint64_t>(component.projected.size())) + 1);
  }
  return {component.projected.adjoint() / component.gain};
}

double zf_post_snr(const CMatrix& channel, int user, double rho, CostMeter* meter) {
  const ZfComponent component = zf_component(channel, user, meter);
  if (meter) meter->add(1);
  return rho * component.gain;
}

Complex subarray_soft(const CMatrix& channel, const CVector& received, int user,
                      CostMeter* meter) {
  if (received.size() != channel.rows()) {
    throw std::invalid_argument("subarray_soft: received vector length mismatch");
  }
  const ZfComponent component = zf_component(channel, user, meter);
  if (meter) {
    meter->add(cost::dot(static_cast<std::uint64_t>(component.projected.size())) + 1);
  }
  return component.projected.dot(received) / component.gain;
}

RealVector dldf_weights(const RealVector& subarray_snr) {
  if (subarray_snr.size() == 0) {
    throw std::invalid_argument("dldf_weights: empty SNR vector");
  }
  for (Eigen::Index b = 0; b < subarray_snr.size(); ++b) {
    if (!(subarray_snr(b) > 0.0) || !std::isfinite(subarray_snr(b))) {
      throw std::invalid_argument("dldf_weights: SNRs must be positive and finite");
    }
  }
  return subarray_snr / subarray_snr.sum();
}

ZfDetection detect_zf(const CMatrix& channel, const CVector& received, CostMeter* meter) {
  const Eigen::Index users = channel.cols();
  ZfDetection result;
  result.soft.resize(users);
  result.decisions.reserve(static_cast<std::size_t>(users));
  for (Eigen::Index k = 0; k < users; ++k) {
    result.soft(k) = subarray_soft(channel, received, static_cast<int>(k), meter);
    result.decisions.push_back(hard_decision(result.soft(k)));
  }
  return result;
}

DldfDetection detect_dldf(const CMatrix& channel, const CVector& received,
                          const SubarrayPartition& partition, double rho,
                          CostMeter* meter) {
  const Eigen::Index users = channel.cols();
  const int blocks = partition.count();
  if (blocks < 1) throw std::invalid_argument("detect_dldf: empty partition");

  DldfDetection result;
  result.subarray_soft.resize(blocks, users);
  result.subarray_snr.resize(blocks, users);
  result.weights.resize(blocks, users);
  RealMatrix gains(blocks, users);

  for (int b = 0; b < blocks; ++b) {
    const CMatrix channel_b = block(channel, partition, b);
    const CVector received_b = block(received, partition, b);
    for (Eigen::Index k = 0; k < users; ++k) {
      try {
        const CVector projected = projected_column(channel_b, static_cast<int>(k), meter);
        const double gain = projected_gain(channel_b, static_cast<int>(k), projected, meter);
        gains(b, k) = gain;
        result.subarray_snr(b, k) = rho * gain;
        result.subarray_soft(b, k) = projected.dot(received_b) / gain;
        if (meter) {
          meter->add(cost::dot(static_cast<std::uint64_t>(projected.size())) + 2);
        }
      } catch (const InfeasibleError& err) {
        throw InfeasibleError("subarray " + std::to_string(b) + ": " + err.what());
      }
    }
  }

  result.fused.resize(users);
  result.fused_snr.resize(users);
  result.decisions.reserve(static_cast<std::size_t>(users));
  for (Eigen::Index k = 0; k < users; ++k) {
    // rho cancels in the normalization, so weights come from the gains and
    // stay finite in the noiseless case.
    result.weights.col(k) = gains.col(k) / gains.col(k).sum();
    result.fused(k) = (result.weights.col(k).cast<Complex>().array() *
                       result.subarray_soft.col(k).array())
                          .sum();
    result.fused_snr(k) = result.subarray_snr.col(k).sum();
    if (meter) {
      meter->add(2 * cost::scale(static_cast<std::uint64_t>(blocks)));
    }
    result.decisions.push_back(hard_decision(result.fused(k)));
  }
  return result;
}

}  // namespace xmamimo
