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

#include "irs_sim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "irs_sim/capacity.hpp"
#include "irs_sim/config.hpp"
#include "irs_sim/energy.hpp"
#include "irs_sim/errors.hpp"
#include "irs_sim/harness.hpp"
#include "irs_sim/impairments.hpp"

namespace irs {

namespace {

struct SweepFlags {
  std::string config_path;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::optional<double> phase_noise;
  bool neglect_tx_power = false;
  bool apply_protocol_prefactor = false;
  bool random_phases = false;
};

struct BoundsFlags {
  std::string config_path;
  std::optional<double> kappa_bs;
  std::optional<double> kappa_ue;
  std::optional<double> zeta;
  std::vector<int> antennas;
  bool apply_protocol_prefactor = false;
};

void add_sweep_flags(CLI::App& cmd, SweepFlags& flags) {
  cmd.add_option("--config", flags.config_path, "Key-value config file");
  cmd.add_option("--trials", flags.trials, "Monte Carlo trials per grid point");
  cmd.add_option("--seed", flags.seed, "Base RNG seed");
  cmd.add_option("--out", flags.out_path, "CSV output path (stdout if omitted)");
  cmd.add_option("--phase-noise", flags.phase_noise,
                 "IRS phase-noise width (uniform half-width in radians)");
  cmd.add_flag("--neglect-tx-power", flags.neglect_tx_power,
               "Drop transmit-power terms from the EE denominator");
  cmd.add_flag("--apply-protocol-prefactor", flags.apply_protocol_prefactor,
               "Scale SE by tau_down / tau");
  cmd.add_flag("--random-phases", flags.random_phases,
               "Use uniformly random nominal IRS phases instead of Phi = I");
}

ExperimentConfig load_with_flags(const SweepFlags& flags) {
  ExperimentConfig config;
  if (!flags.config_path.empty()) config = load_config(flags.config_path);
  if (flags.trials) {
    if (*flags.trials < 1) throw InvalidConfig("--trials must be at least 1", "trials");
    config.trials = static_cast<std::size_t>(*flags.trials);
  }
  if (flags.seed) config.seed = *flags.seed;
  if (flags.phase_noise) {
    config.phase_noise.width = *flags.phase_noise;
    config.phase_noise.validate();
  }
  if (flags.neglect_tx_power) config.neglect_tx_power = true;
  if (flags.apply_protocol_prefactor) config.apply_protocol_prefactor = true;
  if (flags.random_phases) config.phases = IrsPhaseProfile::Random;
  return config;
}

int run_sweep_command(SweepKind kind, const SweepFlags& flags, std::ostream& out) {
  const ExperimentConfig config = load_with_flags(flags);
  const SweepResult result = run_sweep(make_sweep_spec(kind, config));
  if (flags.out_path.empty()) {
    write_csv(result, out);
  } else {
    write_csv(result, std::filesystem::path(flags.out_path));
  }
  return 0;
}

// Shortest representation that round-trips.
void print_value(std::ostream& out, const std::string& name, double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  out << name << " = " << std::string_view(buffer, result.ptr) << '\n';
}

int run_bounds_command(const BoundsFlags& flags, std::ostream& out) {
  ExperimentConfig config;
  if (!flags.config_path.empty()) config = load_config(flags.config_path);
  if (flags.kappa_bs) config.system.kappa_bs = *flags.kappa_bs;
  if (flags.kappa_ue) config.system.kappa_ue = *flags.kappa_ue;
  if (flags.zeta) config.power.zeta = *flags.zeta;
  if (flags.apply_protocol_prefactor) config.apply_protocol_prefactor = true;

  const double kb = config.system.kappa_bs;
  const double ku = config.system.kappa_ue;
  ProtocolTiming timing{1.0, 0.0, 0.0, 1.0};
  if (config.apply_protocol_prefactor) {
    timing = config.timing.value_or(ProtocolTiming::for_reflectors(config.system.N));
  }
  timing.validate();
  const double prefactor = timing.downlink_fraction();

  std::vector<int> antennas = flags.antennas;
  if (antennas.empty()) antennas = {1, 5, 15, 20, 50};

  print_value(out, "kappa_BS", kb);
  print_value(out, "kappa_UE", ku);
  print_value(out, "evm_BS", evm_from_kappa(kb));
  print_value(out, "evm_UE", evm_from_kappa(ku));
  print_value(out, "prefactor", prefactor);

  const auto t3 = theorem3_bounds(kb, ku, prefactor);
  print_value(out, "theorem3_upper", t3.upper);
  print_value(out, "shared_lower", t3.lower);
  for (int M : antennas) {
    print_value(out, "theorem2_upper[M=" + std::to_string(M) + "]",
                theorem2_bounds(M, kb, ku, prefactor).upper);
  }
  const auto ee = ee_bounds_max(kb, ku, timing, config.power.zeta);
  print_value(out, "zeta", config.power.zeta);
  print_value(out, "corollary1_ee_lower", ee.lower);
  print_value(out, "corollary1_ee_upper", ee.upper);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo simulator and bound calculator for IRS-assisted links with "
               "hardware impairments",
               "irs-sim"};
  app.require_subcommand(1);

  SweepFlags snr_flags;
  SweepFlags reflector_flags;
  SweepFlags ee_flags;
  BoundsFlags bounds_flags;

  auto* snr = app.add_subcommand("snr-sweep", "Downlink SE versus SNR");
  add_sweep_flags(*snr, snr_flags);
  auto* reflector = app.add_subcommand("reflector-sweep", "Downlink SE versus reflector count");
  add_sweep_flags(*reflector, reflector_flags);
  auto* ee = app.add_subcommand("ee-sweep", "Maximal downlink EE versus antenna count");
  add_sweep_flags(*ee, ee_flags);
  auto* bounds = app.add_subcommand("bounds", "Closed-form capacity and EE limits");
  bounds->add_option("--config", bounds_flags.config_path, "Key-value config file");
  bounds->add_option("--kappa-bs", bounds_flags.kappa_bs, "BS impairment coefficient");
  bounds->add_option("--kappa-ue", bounds_flags.kappa_ue, "User impairment coefficient");
  bounds->add_option("--zeta", bounds_flags.zeta, "Static circuit power (J/channel use)");
  bounds->add_option("--M", bounds_flags.antennas, "Antenna counts for the high-power bound");
  bounds->add_flag("--apply-protocol-prefactor", bounds_flags.apply_protocol_prefactor,
                   "Scale bounds by tau_down / tau");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (snr->parsed()) return run_sweep_command(SweepKind::SnrSweep, snr_flags, out);
    if (reflector->parsed()) {
      return run_sweep_command(SweepKind::ReflectorSweep, reflector_flags, out);
    }
    if (ee->parsed()) return run_sweep_command(SweepKind::AntennaEeSweep, ee_flags, out);
    if (bounds->parsed()) return run_bounds_command(bounds_flags, out);
  } catch (const InvalidConfig& e) {
    err << "irs-sim: invalid configuration";
    if (!e.key().empty()) err << " [" << e.key() << "]";
    err << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "irs-sim: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace irs
