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
#include <optional>

#include "irs_sim/beamforming.hpp"
#include "irs_sim/model.hpp"

namespace irs {

// Which algebraic route evaluates log2(1 + h^H A^{-1} h).
//   Reduced: log2(1 + q / (1 + k_UE q)), q = h^H reduced^{-1} h (diagonal sum)
//   Full:    log2(1 + h^H full^{-1} h)   (Hermitian PD solve)
enum class CapacityForm { Reduced, Full };

struct CapacityEstimate {
  double mean = 0.0;       // bits / channel use
  double std_error = 0.0;
  std::size_t trials = 0;
  bool prefactor_applied = false;
  double prefactor = 1.0;
};

struct CapacityBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Spectral efficiency of one realization with the optimal beamformer, no
// protocol prefactor.
double instantaneous_se(const CVector& h_eff, const SystemConfig& config, LinkDirection dir,
                        CapacityForm form = CapacityForm::Reduced);

// Seed streams consumed by one Monte Carlo trial.
inline constexpr std::uint64_t kChannelStream = 1;
inline constexpr std::uint64_t kPhaseNoiseStream = 2;

// Effective channel of trial `index` under base seed `seed`: fresh channels
// and a fresh phase-noise draw around the nominal phases in `irs`.
CVector draw_trial_channel(const ChannelSampler& sampler, const IrsState& irs, Seed seed,
                           std::uint64_t index);

// Monte Carlo estimate of the ergodic capacity with IRS phases fixed by `irs`.
// When `timing` is given the mean is scaled by tau_down/tau (downlink) or
// tau_up/tau (uplink). Bit-identical for any thread count.
CapacityEstimate ergodic_capacity(const SystemConfig& config, const IrsState& irs,
                                  LinkDirection dir, std::size_t trials, Seed seed,
                                  const std::optional<ProtocolTiming>& timing = std::nullopt,
                                  int threads = 0);

// Sample mean and standard error of the mean (n - 1 normalization; zero for
// a single sample), summed in index order.
CapacityEstimate summarize_samples(const std::vector<double>& samples);

// High-power limit bounds:
//   upper = c log2(1 + M / (k_BS + k_UE (M + k_BS)))
//   lower = c log2(1 + 1 / (k_BS + k_UE (1 + k_BS)))
CapacityBounds theorem2_bounds(int M, double kappa_bs, double kappa_ue, double prefactor);

// Large-array limit bounds: upper = c log2(1 + 1/k_UE), lower as above.
CapacityBounds theorem3_bounds(double kappa_bs, double kappa_ue, double prefactor);

// lim_{p -> inf} E{h^H reduced^{-1} h} = M / ((1 + k_UE) k_BS).
double expected_quadratic_limit(int M, double kappa_bs, double kappa_ue);

}  // namespace irs
