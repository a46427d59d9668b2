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

#include "irs_sim/beamforming.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "irs_sim/errors.hpp"

namespace irs {

namespace {

void check_length(const CVector& v, Eigen::Index M, const char* what) {
  if (v.size() != M) {
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(M) +
                            ", got " + std::to_string(v.size()));
  }
}

Eigen::LLT<CMatrix> factor_pd(const CMatrix& A) {
  Eigen::LLT<CMatrix> llt(A);
  if (llt.info() != Eigen::Success) {
    throw SingularMatrix("noise-plus-distortion matrix is not positive definite");
  }
  return llt;
}

}  // namespace

double noise_to_power_ratio(const SystemConfig& config, LinkDirection dir) {
  double sigma2 = 0.0;
  double power = 0.0;
  const char* power_key = "";
  if (dir == LinkDirection::Downlink) {
    sigma2 = config.sigma2_ue;
    power = config.p_bs;
    power_key = "p_BS";
  } else {
    sigma2 = config.uplink_noise_source == UplinkNoiseSource::Bs ? config.sigma2_bs
                                                                 : config.sigma2_ue;
    power = config.p_ue;
    power_key = "p_UE";
  }
  if (!(power > 0.0)) {
    throw InvalidConfig(std::string(power_key) + " must be positive for beamforming", power_key);
  }
  if (!(sigma2 > 0.0)) throw InvalidConfig("noise variance must be positive", "sigma2");
  return sigma2 / power;
}

NoisePlusDistortionMatrix build_noise_matrices(const CVector& h_eff, double kappa_bs,
                                               double kappa_ue, double noise_to_power) {
  if (!(noise_to_power > 0.0) || !std::isfinite(noise_to_power)) {
    throw InvalidConfig("sigma^2 / p must be positive and finite", "sigma2");
  }
  if (!(kappa_bs >= 0.0)) throw InvalidConfig("kappa_BS must be non-negative", "kappa_BS");
  if (!(kappa_ue >= 0.0)) throw InvalidConfig("kappa_UE must be non-negative", "kappa_UE");

  const Eigen::Index M = h_eff.size();
  NoisePlusDistortionMatrix mat;
  mat.kappa_ue = kappa_ue;
  mat.noise_to_power = noise_to_power;
  mat.reduced = CMatrix::Zero(M, M);
  mat.reduced.diagonal() =
      ((1.0 + kappa_ue) * kappa_bs * h_eff.cwiseAbs2().array() + noise_to_power)
          .matrix()
          .cast<Complex>();
  mat.full = mat.reduced + kappa_ue * (h_eff * h_eff.adjoint());
  return mat;
}

NoisePlusDistortionMatrix build_noise_matrices(const CVector& h_eff, const SystemConfig& config,
                                               LinkDirection dir) {
  check_length(h_eff, config.M, "build_noise_matrices");
  return build_noise_matrices(h_eff, config.kappa_bs, config.kappa_ue,
                              noise_to_power_ratio(config, dir));
}

CVector optimal_beamformer(const CVector& h_eff, const NoisePlusDistortionMatrix& mat) {
  check_length(h_eff, mat.full.rows(), "optimal_beamformer");
  if (h_eff.squaredNorm() == 0.0) {
    throw ZeroChannel("optimal_beamformer: beamforming direction undefined for h = 0");
  }
  const CVector x = factor_pd(mat.full).solve(h_eff);
  const double norm = x.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw SingularMatrix("optimal_beamformer: solve produced a degenerate direction");
  }
  return x / norm;
}

double snr(const CVector& w, const CVector& h_eff, const NoisePlusDistortionMatrix& mat) {
  check_length(h_eff, mat.full.rows(), "snr");
  check_length(w, mat.full.rows(), "snr");
  if (std::abs(w.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("snr: beamforming vector must have unit norm");
  }
  const double signal = std::norm(h_eff.dot(w));
  const double interference = w.dot(mat.full * w).real();
  return signal / interference;
}

double quadratic_form(const CVector& h_eff, const NoisePlusDistortionMatrix& mat,
                      bool use_reduced) {
  check_length(h_eff, mat.full.rows(), "quadratic_form");
  if (use_reduced) {
    const RVector d = mat.reduced.diagonal().real();
    if (d.size() > 0 && !(d.minCoeff() > 0.0)) {
      throw SingularMatrix("quadratic_form: reduced matrix has a non-positive diagonal");
    }
    return (h_eff.cwiseAbs2().array() / d.array()).sum();
  }
  return h_eff.dot(factor_pd(mat.full).solve(h_eff)).real();
}

double reduced_quadratic_sum(const CVector& h_eff, double kappa_bs, double kappa_ue,
                             double noise_to_power) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < h_eff.size(); ++i) {
    const double gain = std::norm(h_eff[i]);
    sum += gain / ((1.0 + kappa_ue) * kappa_bs * gain + noise_to_power);
  }
  return sum;
}

CRowVector rank_one_resolvent(const CMatrix& B, Complex tau, const CVector& q) {
  if (B.rows() != B.cols() || B.rows() != q.size()) {
    throw DimensionMismatch("rank_one_resolvent: B must be square with the size of q");
  }
  // q^H B^{-1} = (B^{-H} q)^H
  const Eigen::FullPivLU<CMatrix> lu(B.adjoint());
  if (!lu.isInvertible()) throw SingularMatrix("rank_one_resolvent: B is singular");
  const CVector y = lu.solve(q);
  const Complex quad = y.dot(q);  // q^H B^{-1} q
  const Complex denom = 1.0 + tau * quad;
  const double scale = 1.0 + std::abs(tau * quad);
  if (std::abs(denom) <= 1e-14 * scale) {
    throw SingularMatrix("rank_one_resolvent: B + tau q q^H is singular");
  }
  return y.adjoint() / denom;
}

}  // namespace irs
