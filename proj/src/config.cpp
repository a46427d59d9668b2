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

#include "irs_sim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "irs_sim/errors.hpp"

namespace irs {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  throw InvalidConfig("invalid value '" + value + "' for key '" + key + "': expected " + expected,
                      key);
}

double parse_double(std::string_view text, const std::string& key) {
  std::string token = trim(text);
  std::string_view view = token;
  if (!view.empty() && view.front() == '+') view.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec != std::errc() || ptr != view.data() + view.size() || view.empty()) {
    bad_value(key, token, "a number");
  }
  return value;
}

int parse_int(const std::string& text, const std::string& key) {
  const double value = parse_double(text, key);
  if (value != std::floor(value) || std::abs(value) > 1e9) bad_value(key, text, "an integer");
  return static_cast<int>(value);
}

bool parse_bool(const std::string& text, const std::string& key) {
  const std::string v = lower(trim(text));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, text, "a boolean");
}

std::vector<int> to_ints(const std::vector<double>& values, const std::string& key) {
  std::vector<int> out;
  out.reserve(values.size());
  for (double v : values) {
    if (v != std::floor(v) || v < 0.0) bad_value(key, std::to_string(v), "non-negative integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

ProtocolTiming& explicit_timing(ExperimentConfig& config) {
  if (!config.timing) config.timing = ProtocolTiming{0.0, 0.0, 0.0, 0.0};
  return *config.timing;
}

}  // namespace

Complex parse_complex(const std::string& text, const std::string& key) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) bad_value(key, text, "a complex number");
  const char last = static_cast<char>(std::tolower(static_cast<unsigned char>(s.back())));
  if (last != 'j' && last != 'i') return {parse_double(s, key), 0.0};

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double(part, key);
  };
  if (split == std::string::npos) return {0.0, imag_of(s)};
  return {parse_double(s.substr(0, split), key), imag_of(s.substr(split))};
}

std::vector<double> parse_number_list(const std::string& text, const std::string& key) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) bad_value(key, text, "a comma-separated list");
    if (item.find(':') == std::string::npos) {
      out.push_back(parse_double(item, key));
      continue;
    }
    std::vector<double> parts;
    std::stringstream range(item);
    std::string part;
    while (std::getline(range, part, ':')) parts.push_back(parse_double(part, key));
    if (parts.size() != 2 && parts.size() != 3) bad_value(key, item, "start:stop or start:step:stop");
    const double start = parts.front();
    const double stop = parts.back();
    const double step = parts.size() == 3 ? parts[1] : 1.0;
    if (!(step > 0.0) || stop < start) bad_value(key, item, "an increasing range");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= count; ++k) out.push_back(start + static_cast<double>(k) * step);
  }
  if (out.empty()) bad_value(key, text, "a non-empty list");
  return out;
}

CovarianceSpec CovarianceSpec::parse(const std::string& text, const std::string& key) {
  const std::string value = trim(text);
  const std::string lowered = lower(value);
  CovarianceSpec spec;
  if (lowered == "identity") return spec;
  if (lowered.rfind("scaled:", 0) == 0) {
    spec.kind = Kind::Scaled;
    spec.scale = parse_double(value.substr(7), key);
    if (!(spec.scale >= 0.0)) bad_value(key, value, "a non-negative scale");
    return spec;
  }
  spec.kind = Kind::Explicit;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) spec.entries.push_back(parse_complex(item, key));
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(spec.entries.size())));
  if (spec.entries.empty() || n * n != spec.entries.size()) {
    bad_value(key, value, "'identity', 'scaled:<c>' or a square row-major list");
  }
  return spec;
}

CMatrix CovarianceSpec::resolve(int M, const std::string& key) const {
  switch (kind) {
    case Kind::Identity:
      return CMatrix::Identity(M, M);
    case Kind::Scaled:
      return scale * CMatrix::Identity(M, M);
    case Kind::Explicit:
      break;
  }
  const auto n = static_cast<int>(std::llround(std::sqrt(entries.size())));
  if (n != M) {
    throw InvalidConfig(key + " is " + std::to_string(n) + "x" + std::to_string(n) +
                            " but M = " + std::to_string(M),
                        key);
  }
  CMatrix out(M, M);
  for (int r = 0; r < M; ++r) {
    for (int c = 0; c < M; ++c) out(r, c) = entries[static_cast<std::size_t>(r * M + c)];
  }
  return out;
}

SystemConfig ExperimentConfig::resolve_system(int M, int N) const {
  SystemConfig out = system;
  out.M = M;
  out.N = N;
  out.cov_direct = cov_direct.resolve(M, "cov_direct");
  const CMatrix shared = cov_irs.resolve(M, "cov_irs");
  out.cov_irs_columns.assign(static_cast<std::size_t>(std::max(N, 0)), shared);
  for (const auto& [index, spec] : cov_irs_overrides) {
    const std::string key = "cov_irs." + std::to_string(index);
    if (index >= N) {
      throw InvalidConfig(key + " refers to a column beyond N = " + std::to_string(N), key);
    }
    out.cov_irs_columns[static_cast<std::size_t>(index)] = spec.resolve(M, key);
  }
  out.validate();
  return out;
}

void apply_config_value(ExperimentConfig& config, const std::string& raw_key,
                        const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  SystemConfig& s = config.system;

  if (key == "M") {
    s.M = parse_int(value, key);
  } else if (key == "N") {
    s.N = parse_int(value, key);
  } else if (key == "p_BS") {
    s.p_bs = parse_double(value, key);
  } else if (key == "p_UE") {
    s.p_ue = parse_double(value, key);
  } else if (key == "sigma2_BS") {
    s.sigma2_bs = parse_double(value, key);
  } else if (key == "sigma2_UE") {
    s.sigma2_ue = parse_double(value, key);
  } else if (key == "kappa_BS") {
    s.kappa_bs = parse_double(value, key);
  } else if (key == "kappa_UE") {
    s.kappa_ue = parse_double(value, key);
  } else if (key == "cov_direct") {
    config.cov_direct = CovarianceSpec::parse(value, key);
  } else if (key == "cov_irs" || key == "cov_irs_columns") {
    config.cov_irs = CovarianceSpec::parse(value, key);
  } else if (key.rfind("cov_irs.", 0) == 0) {
    const int index = parse_int(key.substr(8), key);
    if (index < 0) bad_value(key, key, "a non-negative column index");
    config.cov_irs_overrides[index] = CovarianceSpec::parse(value, key);
  } else if (key == "uplink_noise_variance_source") {
    const std::string v = lower(value);
    if (v == "bs") {
      s.uplink_noise_source = UplinkNoiseSource::Bs;
    } else if (v == "ue-as-printed") {
      s.uplink_noise_source = UplinkNoiseSource::UeAsPrinted;
    } else {
      bad_value(key, value, "'bs' or 'ue-as-printed'");
    }
  } else if (key == "tau") {
    explicit_timing(config).tau = parse_double(value, key);
  } else if (key == "tau_pilot") {
    explicit_timing(config).tau_pilot = parse_double(value, key);
  } else if (key == "tau_up") {
    explicit_timing(config).tau_up = parse_double(value, key);
  } else if (key == "tau_down") {
    explicit_timing(config).tau_down = parse_double(value, key);
  } else if (key == "rho") {
    config.power.rho = parse_double(value, key);
  } else if (key == "zeta") {
    config.power.zeta = parse_double(value, key);
  } else if (key == "power_total") {
    config.power_total = parse_double(value, key);
    if (!(config.power_total > 0.0)) bad_value(key, value, "a positive power");
  } else if (key == "phase_noise_kind") {
    const std::string v = lower(value);
    if (v == "uniform") {
      config.phase_noise.kind = PhaseNoiseKind::Uniform;
    } else if (v == "von-mises" || v == "vonmises" || v == "von_mises") {
      config.phase_noise.kind = PhaseNoiseKind::VonMises;
    } else {
      bad_value(key, value, "'uniform' or 'von-mises'");
    }
  } else if (key == "phase_noise_width") {
    config.phase_noise.width = parse_double(value, key);
  } else if (key == "irs_phases") {
    const std::string v = lower(value);
    if (v == "zero" || v == "identity") {
      config.phases = IrsPhaseProfile::Zero;
    } else if (v == "random") {
      config.phases = IrsPhaseProfile::Random;
    } else {
      bad_value(key, value, "'zero' or 'random'");
    }
  } else if (key == "grid.M") {
    config.grid_M = to_ints(parse_number_list(value, key), key);
  } else if (key == "grid.N") {
    config.grid_N = to_ints(parse_number_list(value, key), key);
  } else if (key == "grid.snr_db") {
    config.grid_snr_db = parse_number_list(value, key);
  } else if (key == "grid.rho_fraction") {
    config.grid_rho_fraction = parse_number_list(value, key);
  } else if (key == "trials") {
    const int trials = parse_int(value, key);
    if (trials < 1) bad_value(key, value, "at least 1");
    config.trials = static_cast<std::size_t>(trials);
  } else if (key == "seed") {
    const double seed = parse_double(value, key);
    if (seed < 0.0 || seed != std::floor(seed)) bad_value(key, value, "a non-negative integer");
    config.seed = static_cast<Seed>(seed);
  } else if (key == "apply_protocol_prefactor") {
    config.apply_protocol_prefactor = parse_bool(value, key);
  } else if (key == "neglect_tx_power") {
    config.neglect_tx_power = parse_bool(value, key);
  } else {
    throw InvalidConfig("unknown config key '" + key + "'", key);
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig config;
  std::stringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidConfig("line " + std::to_string(line_no) + ": expected 'key = value'",
                          trim(line));
    }
    apply_config_value(config, line.substr(0, eq), line.substr(eq + 1));
  }

  if (config.timing) {
    auto& t = *config.timing;
    if (t.tau == 0.0) t.tau = t.tau_pilot + t.tau_up + t.tau_down;
    t.validate();
  }
  config.phase_noise.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidConfig("cannot read config file '" + path.string() + "'", "config");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace irs
