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

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "irs_sim/errors.hpp"
#include "irs_sim/harness.hpp"

namespace irs {

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buffer, ptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  for (const auto& name : result.param_names) out << name << ',';
  out << result.value_name << ",std_err,bound_lower,bound_upper\n";
  for (const auto& row : result.rows) {
    if (row.params.size() != result.param_names.size()) {
      throw DimensionMismatch("write_csv: row has the wrong number of parameters");
    }
    for (double p : row.params) out << format_number(p) << ',';
    out << format_number(row.value) << ',' << format_number(row.std_err) << ','
        << format_number(row.bound_lower) << ',' << format_number(row.bound_upper) << '\n';
  }
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ostringstream buffer;
  write_csv(result, buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << buffer.str();
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: missing header row");
  table.header = split_fields(line);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != table.header.size()) {
      throw std::runtime_error("read_csv: line " + std::to_string(line_no) +
                               " has the wrong number of fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& field : fields) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::runtime_error("read_csv: line " + std::to_string(line_no) +
                                 ": bad number '" + field + "'");
      }
      row.push_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  return read_csv(in);
}

}  // namespace irs
