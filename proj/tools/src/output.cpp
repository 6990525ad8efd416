// Copyright 2026 The ginibre-edge Authors
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


#include "ginibre_edge_cli/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/version.hpp"

namespace ginibre_edge::cli {
namespace {

constexpr std::string_view kBanner = "# ginibre-edge ";
constexpr std::string_view kConfig = "# config ";
constexpr std::string_view kDiagnostics = "# diagnostics ";

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

double parse_cell(std::string_view cell) {
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("malformed numeric cell '" + std::string(cell) + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the columns");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), r.ptr);
}

void write_csv(std::ostream& os, const RunConfig& config, const Table& table) {
  os << kBanner << kVersion << '\n';
  os << kConfig << nlohmann::json(config).dump() << '\n';
  os << kDiagnostics << table.diagnostics.dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const RunConfig& config, const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (double v : row) r.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_double(v)));
    rows.push_back(std::move(r));
  }
  const nlohmann::json doc{{"version", kVersion},
                           {"config", config},
                           {"columns", table.columns},
                           {"rows", std::move(rows)},
                           {"diagnostics", table.diagnostics}};
  os << doc.dump(1) << '\n';
}

void write(const RunConfig& config, const Table& table) {
  const auto emit = [&](std::ostream& os) {
    if (config.format == "json") {
      write_json(os, config, table);
    } else {
      write_csv(os, config, table);
    }
  };
  if (config.output == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + config.output + "' for writing");
  emit(out);
  if (!out) throw std::runtime_error("write to '" + config.output + "' failed");
}

ParsedOutput read_output(std::istream& is) {
  ParsedOutput out;
  is >> std::ws;
  if (is.peek() == '{') {
    const auto doc = nlohmann::json::parse(is);
    out.version = doc.at("version").get<std::string>();
    out.config = doc.at("config").get<RunConfig>();
    out.table.columns = doc.at("columns").get<std::vector<std::string>>();
    out.table.diagnostics = doc.at("diagnostics");
    for (const auto& r : doc.at("rows")) {
      std::vector<double> row;
      for (const auto& v : r) row.push_back(v.is_string() ? parse_cell(v.get<std::string>()) : v.get<double>());
      out.table.rows.push_back(std::move(row));
    }
    return out;
  }
  std::string line;
  bool have_config = false;
  bool have_columns = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (starts_with(line, kBanner)) {
      out.version = line.substr(kBanner.size());
    } else if (starts_with(line, kConfig)) {
      out.config = nlohmann::json::parse(line.substr(kConfig.size())).get<RunConfig>();
      have_config = true;
    } else if (starts_with(line, kDiagnostics)) {
      out.table.diagnostics = nlohmann::json::parse(line.substr(kDiagnostics.size()));
    } else if (line[0] == '#') {
      continue;
    } else if (!have_columns) {
      out.table.columns = split(line);
      have_columns = true;
    } else {
      std::vector<double> row;
      for (const auto& cell : split(line)) row.push_back(parse_cell(cell));
      out.table.add_row(std::move(row));
    }
  }
  if (!have_config || !have_columns) throw DomainError("not a ginibre-edge output file");
  return out;
}

}  // namespace ginibre_edge::cli
