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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "irs_sim/types.hpp"

namespace irs {

using Seed = std::uint64_t;
using Engine = std::mt19937_64;

// Mixes (base, stream, index) into an independent 64-bit seed. Used to give
// every Monte Carlo trial and every random quantity inside a trial its own
// engine, so results do not depend on evaluation order.
Seed derive_seed(Seed base, std::uint64_t stream, std::uint64_t index = 0) noexcept;

// Receiver noise variance used in the uplink noise-plus-distortion matrix.
// sigma2_UE for both directions.
// sigma2_UE, matching the printed form of the combining theorem.
enum class UplinkNoiseSource { Bs, UeAsPrinted };

struct SystemConfig {
  int M = 1;                 // BS antennas
  int N = 0;                 // IRS reflectors
  double p_bs = 1.0;         // J / channel use
  double p_ue = 1.0;
  double sigma2_bs = 1.0;
  double sigma2_ue = 1.0;
  double kappa_bs = 0.0025;  // EVM^2
  double kappa_ue = 0.0025;
  CMatrix cov_direct;                  // M x M
  std::vector<CMatrix> cov_irs_columns;  // N matrices, each M x M
  UplinkNoiseSource uplink_noise_source = UplinkNoiseSource::Bs;

  // Identity covariances for the direct link and every cascaded column.
  static SystemConfig with_identity_covariances(int M, int N);

  // Throws InvalidConfig naming the offending field.
  void validate() const;
};

struct ProtocolTiming {
  double tau = 1.0;
  double tau_pilot = 0.0;
  double tau_up = 0.0;
  double tau_down = 1.0;

  // One channel use per training subphase (N + 1 of them), tau = 10 (N + 1),
  // remaining uses split evenly between uplink and downlink data.
  static ProtocolTiming for_reflectors(int N);

  double downlink_fraction() const { return tau_down / tau; }
  double uplink_fraction() const { return tau_up / tau; }

  void validate() const;
};

struct ChannelRealization {
  CVector h_d;    // M
  CMatrix H_irs;  // M x N, cascaded G diag(h_r)

  int antennas() const { return static_cast<int>(h_d.size()); }
  int reflectors() const { return static_cast<int>(H_irs.cols()); }
};

// Returns G diag(h_r).
CMatrix cascade_channel(const CMatrix& G, const CVector& h_r);

// Draws circularly-symmetric complex Gaussian channels for a fixed
// configuration. Covariance square roots are computed once at construction;
// scaled-identity covariances skip the matrix product entirely.
class ChannelSampler {
 public:
  explicit ChannelSampler(const SystemConfig& config);

  ChannelRealization draw(Seed seed) const;
  ChannelRealization draw(Engine& engine) const;

  int antennas() const { return M_; }
  int reflectors() const { return static_cast<int>(columns_.size()); }

 private:
  struct Factor {
    bool scaled_identity = false;
    double scale = 0.0;  // sqrt of the identity multiple
    CMatrix root;        // root * root^H == covariance
  };

  static Factor factorize(const CMatrix& cov, const char* key);
  CVector sample(const Factor& factor, Engine& engine) const;

  int M_;
  Factor direct_;
  std::vector<Factor> columns_;
};

ChannelRealization generate_channels(const SystemConfig& config, Seed seed);

enum class PhaseNoiseKind { Uniform, VonMises };

// Uniform: support [-width, width], width in [0, pi].
// VonMises: width is the concentration parameter (>= 0); 0 is the uniform
// circle. Both densities are symmetric about zero.
struct PhaseNoiseModel {
  PhaseNoiseKind kind = PhaseNoiseKind::Uniform;
  double width = 0.0;

  void validate() const;
  double sample(Engine& engine) const;
  // E{exp(j dtheta)}, real because the density is symmetric.
  double circular_mean_resultant() const;
};

struct IrsState {
  RVector theta;        // nominal phases in [0, 2 pi)
  PhaseNoiseModel noise;
  RVector delta_theta;  // realized phase noise in [-pi, pi)

  // Phi = I: all nominal phases zero.
  static IrsState identity(int N, PhaseNoiseModel noise = {});
  static IrsState random_phases(int N, Seed seed, PhaseNoiseModel noise = {});

  int reflectors() const { return static_cast<int>(theta.size()); }

  // exp(j (theta_i + delta_theta_i)), each of unit modulus.
  CVector noisy_phases() const;
};

IrsState realize_phase_noise(const IrsState& state, Seed seed);
IrsState realize_phase_noise(const IrsState& state, Engine& engine);

// h_d + H_irs * exp(j (theta + delta_theta)).
CVector effective_channel(const ChannelRealization& realization, const IrsState& irs);

}  // namespace irs
