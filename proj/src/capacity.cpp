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

#include "irs_sim/capacity.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "irs_sim/errors.hpp"
#include "irs_sim/parallel.hpp"

namespace irs {

namespace {

void require_kappa(double kappa, const char* key) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw InvalidConfig(std::string(key) + " must be non-negative", key);
  }
}

void require_prefactor(double prefactor) {
  if (!(prefactor >= 0.0) || !std::isfinite(prefactor)) {
    throw InvalidConfig("prefactor must be non-negative", "prefactor");
  }
}

double shared_lower_sinr(double kappa_bs, double kappa_ue) {
  return 1.0 / (kappa_bs + kappa_ue * (1.0 + kappa_bs));
}

}  // namespace

double instantaneous_se(const CVector& h_eff, const SystemConfig& config, LinkDirection dir,
                        CapacityForm form) {
  if (!h_eff.allFinite()) throw InvalidConfig("effective channel has non-finite entries", "h");
  const auto mat = build_noise_matrices(h_eff, config, dir);
  if (form == CapacityForm::Full) return std::log2(1.0 + quadratic_form(h_eff, mat, false));
  const double q = quadratic_form(h_eff, mat, true);
  return std::log2(1.0 + q / (1.0 + config.kappa_ue * q));
}

CVector draw_trial_channel(const ChannelSampler& sampler, const IrsState& irs, Seed seed,
                           std::uint64_t index) {
  const auto realization = sampler.draw(derive_seed(seed, kChannelStream, index));
  if (irs.noise.width == 0.0 && irs.noise.kind == PhaseNoiseKind::Uniform) {
    return effective_channel(realization, irs);
  }
  return effective_channel(realization,
                           realize_phase_noise(irs, derive_seed(seed, kPhaseNoiseStream, index)));
}

CapacityEstimate summarize_samples(const std::vector<double>& samples) {
  CapacityEstimate out;
  out.trials = samples.size();
  if (samples.empty()) return out;
  double sum = 0.0;
  for (double s : samples) sum += s;
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - out.mean) * (s - out.mean);
    const double n = static_cast<double>(samples.size());
    out.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

CapacityEstimate ergodic_capacity(const SystemConfig& config, const IrsState& irs,
                                  LinkDirection dir, std::size_t trials, Seed seed,
                                  const std::optional<ProtocolTiming>& timing, int threads) {
  if (trials < 1) throw InvalidConfig("trials must be at least 1", "trials");
  if (irs.reflectors() != config.N) {
    throw DimensionMismatch("ergodic_capacity: IRS state has " +
                            std::to_string(irs.reflectors()) + " phases, config N = " +
                            std::to_string(config.N));
  }
  irs.noise.validate();
  double prefactor = 1.0;
  if (timing) {
    timing->validate();
    prefactor = dir == LinkDirection::Downlink ? timing->downlink_fraction()
                                               : timing->uplink_fraction();
  }
  // Fail on bad power / noise before spawning workers.
  (void)noise_to_power_ratio(config, dir);

  const ChannelSampler sampler(config);
  std::vector<double> samples(trials);
  parallel_for(
      trials,
      [&](std::size_t i) {
        const CVector h = draw_trial_channel(sampler, irs, seed, i);
        samples[i] = prefactor * instantaneous_se(h, config, dir);
      },
      threads);

  CapacityEstimate out = summarize_samples(samples);
  out.prefactor_applied = timing.has_value();
  out.prefactor = prefactor;
  return out;
}

CapacityBounds theorem2_bounds(int M, double kappa_bs, double kappa_ue, double prefactor) {
  if (M < 1) throw InvalidConfig("M must be at least 1", "M");
  require_kappa(kappa_bs, "kappa_BS");
  require_kappa(kappa_ue, "kappa_UE");
  require_prefactor(prefactor);
  if (kappa_bs == 0.0 && kappa_ue == 0.0) {
    throw UnboundedCapacity("high-power capacity limit is infinite with ideal hardware");
  }
  const double m = static_cast<double>(M);
  CapacityBounds out;
  out.upper = prefactor * std::log2(1.0 + m / (kappa_bs + kappa_ue * (m + kappa_bs)));
  out.lower = prefactor * std::log2(1.0 + shared_lower_sinr(kappa_bs, kappa_ue));
  return out;
}

CapacityBounds theorem3_bounds(double kappa_bs, double kappa_ue, double prefactor) {
  require_kappa(kappa_bs, "kappa_BS");
  require_kappa(kappa_ue, "kappa_UE");
  require_prefactor(prefactor);
  if (kappa_ue == 0.0) {
    throw UnboundedCapacity("large-array capacity limit is infinite with kappa_UE = 0");
  }
  CapacityBounds out;
  out.upper = prefactor * std::log2(1.0 + 1.0 / kappa_ue);
  out.lower = prefactor * std::log2(1.0 + shared_lower_sinr(kappa_bs, kappa_ue));
  return out;
}

double expected_quadratic_limit(int M, double kappa_bs, double kappa_ue) {
  if (M < 0) throw InvalidConfig("M must be non-negative", "M");
  require_kappa(kappa_bs, "kappa_BS");
  require_kappa(kappa_ue, "kappa_UE");
  if (kappa_bs == 0.0) {
    throw UnboundedCapacity("quadratic-form limit diverges with kappa_BS = 0");
  }
  return static_cast<double>(M) / ((1.0 + kappa_ue) * kappa_bs);
}

}  // namespace irs
