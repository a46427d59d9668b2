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

#include "irs_sim/energy.hpp"

#include <cmath>
#include <string>

#include "irs_sim/errors.hpp"

namespace irs {

namespace {

void require_non_negative(double value, const char* key) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidConfig(std::string(key) + " must be non-negative", key);
  }
}

// tau zeta / (tau_up + tau_down)
double static_power_denominator(const ProtocolTiming& timing, double zeta) {
  timing.validate();
  if (!(zeta > 0.0) || !std::isfinite(zeta)) {
    throw InvalidConfig("zeta must be positive", "zeta");
  }
  return timing.tau * zeta / (timing.tau_up + timing.tau_down);
}

}  // namespace

PowerModel PowerModel::from_split(double total, double rho_fraction) {
  if (!(rho_fraction >= 0.0 && rho_fraction < 1.0)) {
    throw InvalidConfig("rho fraction must lie in [0, 1)", "rho_fraction");
  }
  PowerModel model{rho_fraction * total, (1.0 - rho_fraction) * total};
  model.validate();
  return model;
}

void PowerModel::validate() const {
  require_non_negative(rho, "rho");
  if (!(zeta > 0.0) || !std::isfinite(zeta)) throw InvalidConfig("zeta must be positive", "zeta");
}

double energy_per_coherence(const ProtocolTiming& timing, double p_bs, double p_ue) {
  require_non_negative(timing.tau_pilot, "tau_pilot");
  require_non_negative(timing.tau_up, "tau_up");
  require_non_negative(timing.tau_down, "tau_down");
  require_non_negative(p_bs, "p_BS");
  require_non_negative(p_ue, "p_UE");
  return timing.tau_down * p_bs + (timing.tau_pilot + timing.tau_up) * p_ue;
}

double downlink_average_power(const ProtocolTiming& timing, double p_bs, double p_ue,
                              const PowerModel& power, int M) {
  timing.validate();
  power.validate();
  require_non_negative(p_bs, "p_BS");
  require_non_negative(p_ue, "p_UE");
  if (M < 0) throw InvalidConfig("M must be non-negative", "M");
  const double data = timing.tau_up + timing.tau_down;
  const double circuit =
      timing.tau_pilot * p_ue / timing.tau + static_cast<double>(M) * power.rho + power.zeta;
  return timing.tau_down / data * circuit + timing.tau_down * p_bs / timing.tau;
}

double downlink_ee(double capacity, const ProtocolTiming& timing, double p_bs, double p_ue,
                   const PowerModel& power, int M) {
  require_non_negative(capacity, "capacity");
  const double denom = downlink_average_power(timing, p_bs, p_ue, power, M);
  if (!(denom > 0.0)) {
    throw InvalidConfig("downlink average power is zero (tau_down = 0?)", "tau_down");
  }
  return capacity / denom;
}

CapacityBounds ee_bounds_max(double kappa_bs, double kappa_ue, const ProtocolTiming& timing,
                             double zeta) {
  const double denom = static_power_denominator(timing, zeta);
  const auto se = theorem3_bounds(kappa_bs, kappa_ue, 1.0);
  return {se.lower / denom, se.upper / denom};
}

double ee_upper_fixed_M(int M, double kappa_bs, double kappa_ue, const ProtocolTiming& timing,
                        double zeta) {
  const double denom = static_power_denominator(timing, zeta);
  return theorem2_bounds(M, kappa_bs, kappa_ue, 1.0).upper / denom;
}

}  // namespace irs
