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

#include "irs_sim/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "irs_sim/errors.hpp"

namespace irs {

namespace {

constexpr double kHermitianTolerance = 1e-10;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_positive(double value, const char* key) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidConfig(std::string(key) + " must be positive and finite", key);
  }
}

void require_non_negative(double value, const char* key) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidConfig(std::string(key) + " must be non-negative and finite", key);
  }
}

void check_covariance(const CMatrix& cov, int M, const std::string& key) {
  if (cov.rows() != M || cov.cols() != M) {
    throw InvalidConfig(key + " must be " + std::to_string(M) + "x" + std::to_string(M), key);
  }
  if (!cov.allFinite()) throw InvalidConfig(key + " has non-finite entries", key);
  const double scale = std::max(1.0, cov.norm());
  if ((cov - cov.adjoint()).norm() > kHermitianTolerance * scale) {
    throw InvalidConfig(key + " is not Hermitian", key);
  }
  if (M == 0) return;
  const Complex c00 = cov(0, 0);
  if ((cov - c00 * CMatrix::Identity(M, M)).cwiseAbs().maxCoeff() == 0.0) {
    if (c00.real() < 0.0) throw InvalidConfig(key + " is not positive semi-definite", key);
    return;
  }
  const Eigen::SelfAdjointEigenSolver<CMatrix> eig(cov, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kHermitianTolerance * scale) {
    throw InvalidConfig(key + " is not positive semi-definite", key);
  }
}

}  // namespace

Seed derive_seed(Seed base, std::uint64_t stream, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(splitmix64(base) ^ stream) + index);
}

SystemConfig SystemConfig::with_identity_covariances(int M, int N) {
  SystemConfig config;
  config.M = M;
  config.N = N;
  config.cov_direct = CMatrix::Identity(M, M);
  config.cov_irs_columns.assign(static_cast<std::size_t>(N), CMatrix::Identity(M, M));
  return config;
}

void SystemConfig::validate() const {
  if (M < 1) throw InvalidConfig("M must be at least 1", "M");
  if (N < 0) throw InvalidConfig("N must be non-negative", "N");
  // Zero transmit power is admissible (no signal, no distortion); the
  // beamforming layer rejects it where a ratio sigma^2 / p is needed.
  require_non_negative(p_bs, "p_BS");
  require_non_negative(p_ue, "p_UE");
  require_positive(sigma2_bs, "sigma2_BS");
  require_positive(sigma2_ue, "sigma2_UE");
  require_non_negative(kappa_bs, "kappa_BS");
  require_non_negative(kappa_ue, "kappa_UE");
  check_covariance(cov_direct, M, "cov_direct");
  if (cov_irs_columns.size() != static_cast<std::size_t>(N)) {
    throw InvalidConfig("cov_irs_columns must hold N = " + std::to_string(N) + " matrices",
                        "cov_irs_columns");
  }
  for (std::size_t i = 0; i < cov_irs_columns.size(); ++i) {
    check_covariance(cov_irs_columns[i], M, "cov_irs_columns[" + std::to_string(i) + "]");
  }
}

ProtocolTiming ProtocolTiming::for_reflectors(int N) {
  ProtocolTiming timing;
  timing.tau_pilot = N + 1.0;
  timing.tau = 10.0 * (N + 1.0);
  timing.tau_up = (timing.tau - timing.tau_pilot) / 2.0;
  timing.tau_down = timing.tau_up;
  return timing;
}

void ProtocolTiming::validate() const {
  require_non_negative(tau_pilot, "tau_pilot");
  require_non_negative(tau_up, "tau_up");
  require_non_negative(tau_down, "tau_down");
  require_positive(tau, "tau");
  if (!(tau_up + tau_down > 0.0)) {
    throw InvalidConfig("tau_up + tau_down must be positive", "tau_up");
  }
  const double total = tau_pilot + tau_up + tau_down;
  if (std::abs(total - tau) > 1e-9 * std::max(1.0, tau)) {
    throw InvalidConfig("tau must equal tau_pilot + tau_up + tau_down", "tau");
  }
}

CMatrix cascade_channel(const CMatrix& G, const CVector& h_r) {
  if (G.cols() != h_r.size()) {
    throw DimensionMismatch("cascade_channel: G has " + std::to_string(G.cols()) +
                            " columns but h_r has " + std::to_string(h_r.size()) + " entries");
  }
  return G * h_r.asDiagonal();
}

ChannelSampler::ChannelSampler(const SystemConfig& config) : M_(config.M) {
  config.validate();
  direct_ = factorize(config.cov_direct, "cov_direct");
  columns_.reserve(config.cov_irs_columns.size());
  for (const auto& cov : config.cov_irs_columns) {
    columns_.push_back(factorize(cov, "cov_irs_columns"));
  }
}

ChannelSampler::Factor ChannelSampler::factorize(const CMatrix& cov, const char* key) {
  Factor factor;
  const Complex c00 = cov.size() > 0 ? cov(0, 0) : Complex{};
  const auto M = cov.rows();
  if (std::abs(c00.imag()) == 0.0 &&
      (cov - c00.real() * CMatrix::Identity(M, M)).cwiseAbs().maxCoeff() == 0.0) {
    if (c00.real() < 0.0) throw InvalidConfig(std::string(key) + " is not PSD", key);
    factor.scaled_identity = true;
    factor.scale = std::sqrt(c00.real());
    return factor;
  }

  // Eigen-decomposition rather than Cholesky so that singular PSD
  // covariances (rank-deficient, zero) are accepted.
  const Eigen::SelfAdjointEigenSolver<CMatrix> eig(cov);
  if (eig.info() != Eigen::Success) {
    throw InvalidConfig(std::string(key) + ": eigen-decomposition failed", key);
  }
  const RVector& lambda = eig.eigenvalues();
  const double tol = kHermitianTolerance * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  if (lambda.minCoeff() < -tol) {
    throw InvalidConfig(std::string(key) + " is not positive semi-definite", key);
  }
  const RVector roots = lambda.cwiseMax(0.0).cwiseSqrt();
  factor.root = eig.eigenvectors() * roots.asDiagonal();
  return factor;
}

CVector ChannelSampler::sample(const Factor& factor, Engine& engine) const {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  CVector z(M_);
  for (int m = 0; m < M_; ++m) {
    const double re = gauss(engine);
    const double im = gauss(engine);
    z[m] = Complex(re, im);
  }
  if (factor.scaled_identity) return factor.scale * z;
  return factor.root * z;
}

ChannelRealization ChannelSampler::draw(Engine& engine) const {
  ChannelRealization out;
  out.h_d = sample(direct_, engine);
  out.H_irs.resize(M_, static_cast<Eigen::Index>(columns_.size()));
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    out.H_irs.col(static_cast<Eigen::Index>(i)) = sample(columns_[i], engine);
  }
  return out;
}

ChannelRealization ChannelSampler::draw(Seed seed) const {
  Engine engine(seed);
  return draw(engine);
}

ChannelRealization generate_channels(const SystemConfig& config, Seed seed) {
  return ChannelSampler(config).draw(seed);
}

void PhaseNoiseModel::validate() const {
  if (!(width >= 0.0) || !std::isfinite(width)) {
    throw InvalidConfig("phase-noise width must be non-negative and finite", "phase_noise_width");
  }
  if (kind == PhaseNoiseKind::Uniform && width > kPi) {
    throw InvalidConfig("uniform phase-noise half-width exceeds pi", "phase_noise_width");
  }
}

namespace {

double wrap_to_pi(double angle) {
  // [-pi, pi)
  double wrapped = std::fmod(angle + kPi, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  return wrapped - kPi;
}

// Best & Fisher (1979) rejection sampler.
double sample_von_mises(double concentration, Engine& engine) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (concentration < 1e-8) return wrap_to_pi(kTwoPi * unit(engine) - kPi);
  const double k = concentration;
  const double a = 1.0 + std::sqrt(1.0 + 4.0 * k * k);
  const double b = (a - std::sqrt(2.0 * a)) / (2.0 * k);
  const double r = (1.0 + b * b) / (2.0 * b);
  double f = 0.0;
  for (;;) {
    const double u1 = unit(engine);
    const double u2 = unit(engine);
    const double z = std::cos(kPi * u1);
    f = (1.0 + r * z) / (r + z);
    const double c = k * (r - f);
    if (c * (2.0 - c) - u2 > 0.0) break;
    if (u2 > 0.0 && std::log(c / u2) + 1.0 - c >= 0.0) break;
  }
  const double u3 = unit(engine);
  const double angle = std::acos(std::clamp(f, -1.0, 1.0));
  return wrap_to_pi(u3 < 0.5 ? -angle : angle);
}

}  // namespace

double PhaseNoiseModel::sample(Engine& engine) const {
  if (kind == PhaseNoiseKind::VonMises) return sample_von_mises(width, engine);
  if (width == 0.0) return 0.0;
  std::uniform_real_distribution<double> dist(-width, width);
  return dist(engine);
}

double PhaseNoiseModel::circular_mean_resultant() const {
  if (kind == PhaseNoiseKind::VonMises) {
    if (width == 0.0) return 0.0;
    // I1/I0 overflows separately for large concentration; ratio is ~1 - 1/(2k).
    if (width > 500.0) return 1.0 - 1.0 / (2.0 * width) - 1.0 / (8.0 * width * width);
    return std::cyl_bessel_i(1.0, width) / std::cyl_bessel_i(0.0, width);
  }
  if (width == 0.0) return 1.0;
  return std::sin(width) / width;
}

IrsState IrsState::identity(int N, PhaseNoiseModel noise) {
  if (N < 0) throw InvalidConfig("N must be non-negative", "N");
  noise.validate();
  return IrsState{RVector::Zero(N), noise, RVector::Zero(N)};
}

IrsState IrsState::random_phases(int N, Seed seed, PhaseNoiseModel noise) {
  IrsState state = identity(N, noise);
  Engine engine(seed);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int i = 0; i < N; ++i) state.theta[i] = phase(engine);
  return state;
}

CVector IrsState::noisy_phases() const {
  CVector out(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    out[i] = std::polar(1.0, theta[i] + delta_theta[i]);
  }
  return out;
}

IrsState realize_phase_noise(const IrsState& state, Engine& engine) {
  state.noise.validate();
  IrsState out = state;
  out.delta_theta.resize(state.theta.size());
  for (Eigen::Index i = 0; i < out.delta_theta.size(); ++i) {
    out.delta_theta[i] = state.noise.sample(engine);
  }
  return out;
}

IrsState realize_phase_noise(const IrsState& state, Seed seed) {
  Engine engine(seed);
  return realize_phase_noise(state, engine);
}

CVector effective_channel(const ChannelRealization& realization, const IrsState& irs) {
  if (realization.H_irs.rows() != realization.h_d.size()) {
    throw DimensionMismatch("effective_channel: H_irs rows differ from h_d length");
  }
  if (realization.H_irs.cols() != irs.theta.size() ||
      irs.delta_theta.size() != irs.theta.size()) {
    throw DimensionMismatch("effective_channel: H_irs has " +
                            std::to_string(realization.H_irs.cols()) +
                            " columns but the IRS state has " +
                            std::to_string(irs.theta.size()) + " phases");
  }
  if (irs.theta.size() == 0) return realization.h_d;
  return realization.h_d + realization.H_irs * irs.noisy_phases();
}

}  // namespace irs
