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
#include <iosfwd>
#include <string>
#include <vector>

#include "irs_sim/config.hpp"

namespace irs {

enum class SweepKind { SnrSweep, ReflectorSweep, AntennaEeSweep };

struct GridPoint {
  int M = 1;
  int N = 0;
  double snr_db = 0.0;
  double rho_fraction = 0.0;
};

struct SweepSpec {
  SweepKind kind = SweepKind::SnrSweep;
  std::vector<GridPoint> grid;
  std::size_t trials = 2000;
  Seed seed = 1;
  ExperimentConfig base;
  int threads = 0;

  void validate() const;
};

struct SweepRow {
  std::vector<double> params;  // in SweepResult::param_names order
  double value = 0.0;          // se_mean or ee
  double std_err = 0.0;
  double bound_lower = 0.0;
  double bound_upper = 0.0;
};

struct SweepResult {
  SweepKind kind = SweepKind::SnrSweep;
  std::vector<std::string> param_names;
  std::string value_name;  // "se_mean" or "ee"
  std::vector<SweepRow> rows;
};

// Column names of the sweep parameters, in grid order.
std::vector<std::string> sweep_param_names(SweepKind kind);
std::string sweep_value_name(SweepKind kind);

// Builds the grid from the config's grid.* keys, falling back to the
// published experiment grids. Cartesian product, first column outermost.
SweepSpec make_sweep_spec(SweepKind kind, const ExperimentConfig& config);

// Downlink SE versus SNR = p_BS / sigma2_UE, with high-power limit bounds.
SweepResult run_snr_sweep(const SweepSpec& spec);
// Downlink SE versus reflector count, with large-array limit bounds.
SweepResult run_reflector_sweep(const SweepSpec& spec);
// Closed-form maximal EE versus antenna count for each rho / (rho + zeta).
SweepResult run_antenna_ee_sweep(const SweepSpec& spec);
SweepResult run_sweep(const SweepSpec& spec);

// Header then one row per grid point. Numbers use 17 significant digits and
// a '.' decimal point regardless of locale.
void write_csv(const SweepResult& result, std::ostream& out);
void write_csv(const SweepResult& result, const std::filesystem::path& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

std::string format_number(double value);

}  // namespace irs
