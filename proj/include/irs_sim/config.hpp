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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irs_sim/energy.hpp"
#include "irs_sim/model.hpp"

namespace irs {

// Covariance as written in a config file: "identity", "scaled:<c>", or an
// explicit row-major list of complex entries ("1, 0.5+0.1j, 0.5-0.1j, 2").
struct CovarianceSpec {
  enum class Kind { Identity, Scaled, Explicit };
  Kind kind = Kind::Identity;
  double scale = 1.0;
  std::vector<Complex> entries;

  static CovarianceSpec parse(const std::string& text, const std::string& key);
  // Materializes an M x M matrix; throws InvalidConfig (naming `key`) when an
  // explicit matrix has the wrong size.
  CMatrix resolve(int M, const std::string& key) const;
};

enum class IrsPhaseProfile { Zero, Random };

// Everything a config file can set. Missing keys keep these defaults.
struct ExperimentConfig {
  SystemConfig system;  // scalar fields only; covariances come from the specs below
  CovarianceSpec cov_direct;
  CovarianceSpec cov_irs;
  std::map<int, CovarianceSpec> cov_irs_overrides;  // per column index

  std::optional<ProtocolTiming> timing;  // explicit tau_* keys
  PowerModel power;
  double power_total = 0.5e-6;  // rho + zeta for the EE sweep

  PhaseNoiseModel phase_noise;
  IrsPhaseProfile phases = IrsPhaseProfile::Zero;

  std::vector<int> grid_M;
  std::vector<int> grid_N;
  std::vector<double> grid_snr_db;
  std::vector<double> grid_rho_fraction;

  std::size_t trials = 2000;
  Seed seed = 1;
  bool apply_protocol_prefactor = false;
  bool neglect_tx_power = false;

  // SystemConfig with the covariances materialized for (M, N).
  SystemConfig resolve_system(int M, int N) const;
};

// Parses "key = value" lines; '#' starts a comment. Throws InvalidConfig
// naming the key on unknown keys or malformed values.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Applies one key/value pair; exposed so the CLI can layer flags on top.
void apply_config_value(ExperimentConfig& config, const std::string& key,
                        const std::string& value);

// "1, 15, 50", "1:500", "-10:5:60" (inclusive ranges).
std::vector<double> parse_number_list(const std::string& text, const std::string& key);

Complex parse_complex(const std::string& text, const std::string& key);

}  // namespace irs
