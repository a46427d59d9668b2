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

#include <doctest.h>

#include <cmath>

#include "irs_sim/energy.hpp"
#include "irs_sim/errors.hpp"

using namespace irs;

TEST_CASE("energy_per_coherence") {
  const ProtocolTiming t{10.0, 2.0, 4.0, 4.0};
  CHECK(energy_per_coherence(t, 2.0, 1.0) == 14.0);
  CHECK(energy_per_coherence(t, 0.0, 0.0) == 0.0);
  const ProtocolTiming down_only{4.0, 0.0, 0.0, 4.0};
  CHECK(energy_per_coherence(down_only, 3.0, 100.0) == 12.0);
}

TEST_CASE("downlink_average_power") {
  const ProtocolTiming t{10.0, 2.0, 4.0, 4.0};
  const PowerModel circuit{0.0, 0.5};
  CHECK(downlink_average_power(t, 2.0, 1.0, circuit, 4) == doctest::Approx(1.15).epsilon(1e-15));
  CHECK(downlink_average_power(t, 0.0, 0.0, circuit, 4) == doctest::Approx(0.5 * 0.5));

  const PowerModel per_antenna{0.01, 0.5};
  const double at_4 = downlink_average_power(t, 2.0, 1.0, per_antenna, 4);
  const double at_8 = downlink_average_power(t, 2.0, 1.0, per_antenna, 8);
  CHECK(at_8 - at_4 == doctest::Approx(0.5 * 4 * 0.01));

  CHECK_THROWS_AS(downlink_average_power(ProtocolTiming{2.0, 2.0, 0.0, 0.0}, 1, 1, circuit, 1),
                  InvalidConfig);
}

TEST_CASE("downlink_ee") {
  const ProtocolTiming t{10.0, 2.0, 4.0, 4.0};
  const PowerModel circuit{0.0, 0.5};
  CHECK(downlink_ee(2.3, t, 2.0, 1.0, circuit, 4) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(downlink_ee(0.0, t, 2.0, 1.0, circuit, 4) == 0.0);
  const double c = 7.5;
  const PowerModel scaled{0.02 * c, 0.5 * c};
  const PowerModel base{0.02, 0.5};
  CHECK(downlink_ee(1.7, t, 2.0 * c, 1.0 * c, scaled, 6) ==
        doctest::Approx(downlink_ee(1.7, t, 2.0, 1.0, base, 6) / c).epsilon(1e-14));
  CHECK_THROWS_AS(downlink_ee(1.0, ProtocolTiming{4.0, 0.0, 4.0, 0.0}, 0, 0, circuit, 1),
                  InvalidConfig);
}

TEST_CASE("ee_bounds_max") {
  const ProtocolTiming no_pilot{1.0, 0.0, 0.0, 1.0};
  const auto b = ee_bounds_max(0.0025, 0.0025, no_pilot, 0.5e-6);
  CHECK(b.upper == doctest::Approx(1.7295e7).epsilon(1e-4));
  CHECK(b.lower == doctest::Approx(1.5299e7).epsilon(1e-4));

  const auto doubled = ee_bounds_max(0.0025, 0.0025, no_pilot, 1.0e-6);
  CHECK(doubled.upper == doctest::Approx(b.upper / 2));
  CHECK(doubled.lower == doctest::Approx(b.lower / 2));

  const auto collapsed = ee_bounds_max(0.0, 0.0025, no_pilot, 0.5e-6);
  CHECK(collapsed.lower == doctest::Approx(collapsed.upper).epsilon(1e-15));

  // Pilots shrink the data share: denominator tau zeta / (tau_up + tau_down).
  const auto with_pilot = ee_bounds_max(0.0025, 0.0025, ProtocolTiming{10.0, 2.0, 4.0, 4.0}, 0.5e-6);
  CHECK(with_pilot.upper == doctest::Approx(0.8 * b.upper));

  CHECK_THROWS_AS(ee_bounds_max(0.0025, 0.0025, no_pilot, 0.0), InvalidConfig);
  CHECK_THROWS_AS(ee_bounds_max(0.0025, 0.0, no_pilot, 0.5e-6), UnboundedCapacity);
}

TEST_CASE("ee_upper_fixed_M") {
  const ProtocolTiming no_pilot{1.0, 0.0, 0.0, 1.0};
  const auto max = ee_bounds_max(0.0025, 0.0025, no_pilot, 0.5e-6);
  CHECK(ee_upper_fixed_M(1, 0.0025, 0.0025, no_pilot, 0.5e-6) ==
        doctest::Approx(max.lower).epsilon(1e-14));
  CHECK(ee_upper_fixed_M(1, 0.0025, 0.0025, no_pilot, 0.5e-6) ==
        doctest::Approx(1.5299e7).epsilon(1e-4));
  double previous = 0.0;
  for (int M = 1; M <= 500; ++M) {
    const double value = ee_upper_fixed_M(M, 0.0025, 0.0025, no_pilot, 0.5e-6);
    CHECK(value >= previous);
    CHECK(value <= max.upper);
    previous = value;
  }
  CHECK(ee_upper_fixed_M(1000000000, 0.0025, 0.0025, no_pilot, 0.5e-6) ==
        doctest::Approx(max.upper).epsilon(1e-9));
}

TEST_CASE("EE composed with the closed-form numerator matches ee_upper_fixed_M") {
  // Transmit power neglected, prefactor tau_down / tau inside the capacity.
  const ProtocolTiming t{10.0, 2.0, 4.0, 4.0};
  const PowerModel circuit{0.0, 0.5e-6};
  for (int M : {1, 3, 15, 50}) {
    const double capacity = theorem2_bounds(M, 0.0025, 0.0025, t.downlink_fraction()).upper;
    CHECK(downlink_ee(capacity, t, 0.0, 0.0, circuit, M) ==
          doctest::Approx(ee_upper_fixed_M(M, 0.0025, 0.0025, t, 0.5e-6)).epsilon(1e-14));
  }
}

TEST_CASE("rho > 0 puts the best antenna count at a finite M") {
  for (double split : {0.002, 0.01, 0.02}) {
    const PowerModel power = PowerModel::from_split(0.5e-6, split);
    const ProtocolTiming unit{1.0, 0.0, 0.0, 1.0};
    int best_M = 0;
    double best = -1.0;
    for (int M = 1; M <= 10000; ++M) {
      const double numerator = theorem2_bounds(M, 0.0025, 0.0025, 1.0).upper;
      const double ee = downlink_ee(numerator, unit, 0.0, 0.0, power, M);
      if (ee > best) {
        best = ee;
        best_M = M;
      }
    }
    CAPTURE(split);
    CHECK(best_M > 1);
    CHECK(best_M < 10000);
  }
}

TEST_CASE("PowerModel::from_split") {
  const auto p = PowerModel::from_split(0.5e-6, 0.02);
  CHECK(p.rho == doctest::Approx(0.01e-6));
  CHECK(p.zeta == doctest::Approx(0.49e-6));
  CHECK_THROWS_AS(PowerModel::from_split(0.5e-6, 1.0), InvalidConfig);
  CHECK_THROWS_AS(PowerModel::from_split(0.5e-6, -0.1), InvalidConfig);
}
