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

#include "irs_sim/harness.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "irs_sim/capacity.hpp"
#include "irs_sim/energy.hpp"
#include "irs_sim/errors.hpp"

namespace irs {

namespace {

constexpr std::uint64_t kRandomPhaseStream = 3;

const std::vector<int> kDefaultSnrM = {1, 15, 50};
const std::vector<int> kDefaultSnrN = {20, 70, 150};
const std::vector<int> kDefaultReflectorM = {1, 5, 20};
const std::vector<double> kDefaultReflectorSnrDb = {10.0, 15.0, 20.0};
const std::vector<int> kDefaultReflectorN = {0, 10, 20, 50, 100, 200, 500, 1000, 2000};
const std::vector<double> kDefaultRhoFractions = {0.0, 0.002, 0.01, 0.02};

std::vector<double> default_snr_db() {
  std::vector<double> out;
  for (int db = -10; db <= 60; db += 5) out.push_back(db);
  return out;
}

std::vector<int> default_ee_antennas() {
  std::vector<int> out;
  for (int m = 1; m <= 500; ++m) out.push_back(m);
  return out;
}

template <typename T>
const std::vector<T>& or_default(const std::vector<T>& configured, const std::vector<T>& fallback) {
  return configured.empty() ? fallback : configured;
}

std::optional<ProtocolTiming> timing_for(const ExperimentConfig& base, int N) {
  if (!base.apply_protocol_prefactor) return std::nullopt;
  if (base.timing) return base.timing;
  return ProtocolTiming::for_reflectors(N);
}

IrsState irs_for(const ExperimentConfig& base, Seed seed, int N) {
  if (base.phases == IrsPhaseProfile::Random) {
    return IrsState::random_phases(N, derive_seed(seed, kRandomPhaseStream, N),
                                   base.phase_noise);
  }
  return IrsState::identity(N, base.phase_noise);
}

// Bounds with infinite entries where the limit diverges.
template <typename Fn>
CapacityBounds bounds_or_unbounded(Fn&& fn, double kappa_bs, double kappa_ue, double prefactor) {
  try {
    return fn();
  } catch (const UnboundedCapacity&) {
    const double inf = std::numeric_limits<double>::infinity();
    return {prefactor * std::log2(1.0 + 1.0 / (kappa_bs + kappa_ue * (1.0 + kappa_bs))), inf};
  }
}

void require_kind(const SweepSpec& spec, SweepKind kind, const char* name) {
  spec.validate();
  if (spec.kind != kind) throw InvalidConfig(std::string(name) + ": wrong sweep kind", "kind");
}

SweepResult empty_result(SweepKind kind) {
  SweepResult out;
  out.kind = kind;
  out.param_names = sweep_param_names(kind);
  out.value_name = sweep_value_name(kind);
  return out;
}

SweepRow se_row(const SweepSpec& spec, const GridPoint& point, bool theorem3) {
  const ExperimentConfig& base = spec.base;
  SystemConfig system = base.resolve_system(point.M, point.N);
  system.p_bs = system.sigma2_ue * std::pow(10.0, point.snr_db / 10.0);

  const auto timing = timing_for(base, point.N);
  const auto estimate =
      ergodic_capacity(system, irs_for(base, spec.seed, point.N), LinkDirection::Downlink,
                       spec.trials, spec.seed, timing, spec.threads);

  const double kb = system.kappa_bs;
  const double ku = system.kappa_ue;
  const double c = estimate.prefactor;
  const auto bounds =
      theorem3 ? bounds_or_unbounded([&] { return theorem3_bounds(kb, ku, c); }, kb, ku, c)
               : bounds_or_unbounded([&] { return theorem2_bounds(point.M, kb, ku, c); }, kb,
                                     ku, c);
  SweepRow row;
  row.value = estimate.mean;
  row.std_err = estimate.std_error;
  row.bound_lower = bounds.lower;
  row.bound_upper = bounds.upper;
  return row;
}

}  // namespace

std::vector<std::string> sweep_param_names(SweepKind kind) {
  switch (kind) {
    case SweepKind::SnrSweep:
      return {"M", "N", "snr_db"};
    case SweepKind::ReflectorSweep:
      return {"M", "snr_db", "N"};
    case SweepKind::AntennaEeSweep:
      return {"rho_fraction", "M"};
  }
  return {};
}

std::string sweep_value_name(SweepKind kind) {
  return kind == SweepKind::AntennaEeSweep ? "ee" : "se_mean";
}

void SweepSpec::validate() const {
  if (grid.empty()) throw InvalidConfig("sweep grid is empty", "grid");
  if (trials < 1) throw InvalidConfig("trials must be at least 1", "trials");
}

SweepSpec make_sweep_spec(SweepKind kind, const ExperimentConfig& config) {
  SweepSpec spec;
  spec.kind = kind;
  spec.trials = config.trials;
  spec.seed = config.seed;
  spec.base = config;

  switch (kind) {
    case SweepKind::SnrSweep: {
      const auto snr = default_snr_db();
      for (int M : or_default(config.grid_M, kDefaultSnrM)) {
        for (int N : or_default(config.grid_N, kDefaultSnrN)) {
          for (double db : or_default(config.grid_snr_db, snr)) {
            spec.grid.push_back({M, N, db, 0.0});
          }
        }
      }
      break;
    }
    case SweepKind::ReflectorSweep:
      for (int M : or_default(config.grid_M, kDefaultReflectorM)) {
        for (double db : or_default(config.grid_snr_db, kDefaultReflectorSnrDb)) {
          for (int N : or_default(config.grid_N, kDefaultReflectorN)) {
            spec.grid.push_back({M, N, db, 0.0});
          }
        }
      }
      break;
    case SweepKind::AntennaEeSweep: {
      const auto antennas = default_ee_antennas();
      for (double split : or_default(config.grid_rho_fraction, kDefaultRhoFractions)) {
        for (int M : or_default(config.grid_M, antennas)) {
          spec.grid.push_back({M, config.system.N, 0.0, split});
        }
      }
      break;
    }
  }
  return spec;
}

SweepResult run_snr_sweep(const SweepSpec& spec) {
  require_kind(spec, SweepKind::SnrSweep, "run_snr_sweep");
  SweepResult out = empty_result(spec.kind);
  for (const auto& point : spec.grid) {
    SweepRow row = se_row(spec, point, false);
    row.params = {double(point.M), double(point.N), point.snr_db};
    out.rows.push_back(std::move(row));
  }
  return out;
}

SweepResult run_reflector_sweep(const SweepSpec& spec) {
  require_kind(spec, SweepKind::ReflectorSweep, "run_reflector_sweep");
  SweepResult out = empty_result(spec.kind);
  for (const auto& point : spec.grid) {
    SweepRow row = se_row(spec, point, true);
    row.params = {double(point.M), point.snr_db, double(point.N)};
    out.rows.push_back(std::move(row));
  }
  return out;
}

SweepResult run_antenna_ee_sweep(const SweepSpec& spec) {
  require_kind(spec, SweepKind::AntennaEeSweep, "run_antenna_ee_sweep");
  const ExperimentConfig& base = spec.base;
  const double kb = base.system.kappa_bs;
  const double ku = base.system.kappa_ue;
  // Reflector count is taken to infinity, so the protocol timing (when
  // applied) comes from the explicit tau_* keys or the configured N.
  const ProtocolTiming timing =
      timing_for(base, base.system.N).value_or(ProtocolTiming{1.0, 0.0, 0.0, 1.0});
  timing.validate();
  const double prefactor = timing.downlink_fraction();
  const double p_bs = base.neglect_tx_power ? 0.0 : base.system.p_bs;
  const double p_ue = base.neglect_tx_power ? 0.0 : base.system.p_ue;

  SweepResult out = empty_result(spec.kind);
  for (const auto& point : spec.grid) {
    const PowerModel power = PowerModel::from_split(base.power_total, point.rho_fraction);
    const double numerator = theorem2_bounds(point.M, kb, ku, prefactor).upper;
    SweepRow row;
    row.params = {point.rho_fraction, double(point.M)};
    row.value = downlink_ee(numerator, timing, p_bs, p_ue, power, point.M);
    row.std_err = 0.0;
    const auto bounds = ee_bounds_max(kb, ku, timing, power.zeta);
    // The lower bound on the maximal EE only holds when circuit power is static.
    row.bound_lower = power.rho == 0.0 ? bounds.lower : std::numeric_limits<double>::quiet_NaN();
    row.bound_upper = bounds.upper;
    out.rows.push_back(std::move(row));
  }
  return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
  switch (spec.kind) {
    case SweepKind::SnrSweep:
      return run_snr_sweep(spec);
    case SweepKind::ReflectorSweep:
      return run_reflector_sweep(spec);
    case SweepKind::AntennaEeSweep:
      return run_antenna_ee_sweep(spec);
  }
  throw InvalidConfig("unknown sweep kind", "kind");
}

}  // namespace irs
