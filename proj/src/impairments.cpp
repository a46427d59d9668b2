// Copyright 2026 The irs-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irs_sim/impairments.hpp"

#include <cmath>
#include <string>

#include "irs_sim/errors.hpp"

namespace irs {

namespace {

void require_kappa(double kappa, const char* key) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw InvalidConfig(std::string(key) + " must be non-negative", key);
  }
}

}  // namespace

double evm_from_kappa(double kappa) {
  require_kappa(kappa, "kappa");
  return std::sqrt(kappa);
}

DistortionCovariances downlink_distortion(const CVector& h_eff, const CMatrix& Q,
                                          double kappa_bs, double kappa_ue) {
  require_kappa(kappa_bs, "kappa_BS");
  require_kappa(kappa_ue, "kappa_UE");
  if (Q.rows() != Q.cols() || Q.rows() != h_eff.size()) {
    throw DimensionMismatch("downlink_distortion: Q must be " + std::to_string(h_eff.size()) +
                            "x" + std::to_string(h_eff.size()));
  }
  const double scale = std::max(1.0, Q.norm());
  if ((Q - Q.adjoint()).norm() > 1e-10 * scale) {
    throw InvalidConfig("transmit covariance Q is not Hermitian", "Q");
  }
  if (Q.size() > 0) {
    const Eigen::SelfAdjointEigenSolver<CMatrix> eig(Q, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10 * scale) {
      throw InvalidConfig("transmit covariance Q is not positive semi-definite", "Q");
    }
  }

  DistortionCovariances out;
  out.upsilon_bs = CMatrix::Zero(Q.rows(), Q.cols());
  out.upsilon_bs.diagonal() = kappa_bs * Q.diagonal().real().cast<Complex>();
  const double signal = h_eff.dot(Q * h_eff).real();
  const double bs_distortion = h_eff.dot(out.upsilon_bs * h_eff).real();
  out.v_ue = kappa_ue * (signal + bs_distortion);
  return out;
}

DistortionCovariances uplink_distortion(const SystemConfig& config) {
  config.validate();
  CMatrix total = config.cov_direct;
  for (const auto& cov : config.cov_irs_columns) total += cov;

  DistortionCovariances out;
  out.v_ue = config.kappa_ue * config.p_ue;
  out.upsilon_bs = CMatrix::Zero(config.M, config.M);
  out.upsilon_bs.diagonal() =
      (config.kappa_bs * config.p_ue * (1.0 + config.kappa_ue)) *
      total.diagonal().real().cast<Complex>();
  return out;
}

}  // namespace irs
