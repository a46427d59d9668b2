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

#include "irs_sim/capacity.hpp"
#include "irs_sim/model.hpp"

namespace irs {

// Baseband circuit power M * rho + zeta, in J / channel use.
struct PowerModel {
  double rho = 0.0;   // per antenna, >= 0
  double zeta = 0.5e-6;  // static, > 0

  // Splits a total rho + zeta by the fraction rho / (rho + zeta).
  static PowerModel from_split(double total, double rho_fraction);

  void validate() const;
};

// Transmit energy per coherence block: tau_down p_BS + (tau_pilot + tau_up) p_UE.
double energy_per_coherence(const ProtocolTiming& timing, double p_bs, double p_ue);

// Downlink share of the average consumed power:
//   tau_down / (tau_up + tau_down) * (tau_pilot p_UE / tau + M rho + zeta)
//     + tau_down p_BS / tau
double downlink_average_power(const ProtocolTiming& timing, double p_bs, double p_ue,
                              const PowerModel& power, int M);

// Downlink energy efficiency in bit / Joule. `capacity` already carries the
// tau_down / tau prefactor. Pass p_bs = p_ue = 0 to neglect transmit power.
double downlink_ee(double capacity, const ProtocolTiming& timing, double p_bs, double p_ue,
                   const PowerModel& power, int M);

// Bounds on the maximal downlink EE with rho = 0.
CapacityBounds ee_bounds_max(double kappa_bs, double kappa_ue, const ProtocolTiming& timing,
                             double zeta);

// EE ceiling at a fixed antenna count as the reflector count grows (rho = 0).
double ee_upper_fixed_M(int M, double kappa_bs, double kappa_ue, const ProtocolTiming& timing,
                        double zeta);

}  // namespace irs
