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

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace xmamimo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

/// Raised when a detector cannot run on the given instance (rank-deficient
/// interference set, too few antennas, overloaded subarray, stalled graph).
/// The Monte-Carlo harness records these as per-detector failures instead of
/// aborting the sweep.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// How antenna indices are assigned to subarrays.
enum class PartitionMode { contiguous, interleaved };

std::string to_string(PartitionMode mode);
PartitionMode partition_mode_from_string(const std::string& name);

/// Full scenario description for one simulation: array geometry, user
/// population, propagation constants, noise level, graph threshold and RNG
/// seed. All detectors and the harness read their parameters from here.
struct SystemConfig {
  int antennas = 512;           // M
  int users = 16;               // K
  int subarrays = 16;           // B, must divide M
  double array_length = 100.0;  // meters
  double user_standoff = 5.0;   // perpendicular user distance from the array line, meters
  double beta = 1.0;            // attenuation coefficient
  double gamma = 2.0;           // pathloss exponent; gains decay as d^(-gamma)
  double noise_variance = 3.1622776601683794e-3;  // sigma_n^2, default = 25 dB SNR
  double p0 = 0.9;              // power-coverage threshold in (0,1]
  int modulation_order = 8;     // 8-PSK is the only supported constellation
  std::uint64_t seed = 1;
  PartitionMode partition_mode = PartitionMode::contiguous;
  // When set, each user's large-scale gain column is rescaled to unit mean so
  // received power becomes independent of the standoff distance.
  bool normalize_pathloss = false;

  /// Throws std::invalid_argument when any field violates its documented range.
  void validate() const;

  /// 1/sigma_n^2; +infinity in the noiseless case.
  double rho() const {
    return noise_variance > 0.0 ? 1.0 / noise_variance
                                : std::numeric_limits<double>::infinity();
  }

  double snr_db() const;
  void set_snr_db(double snr_db);
};

}  // namespace xmamimo
