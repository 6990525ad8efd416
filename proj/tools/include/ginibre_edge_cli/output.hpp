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


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ginibre_edge_cli/run_config.hpp"

namespace ginibre_edge::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json diagnostics = nlohmann::json::object();

  void add_row(std::vector<double> row);
};

/// 17 significant digits, "." decimal point, locale independent.
std::string format_double(double v);

void write_csv(std::ostream& os, const RunConfig& config, const Table& table);
void write_json(std::ostream& os, const RunConfig& config, const Table& table);
void write(const RunConfig& config, const Table& table);

struct ParsedOutput {
  RunConfig config;
  std::string version;
  Table table;
};

/// Reads a file produced by write_csv or write_json.
ParsedOutput read_output(std::istream& is);

}  // namespace ginibre_edge::cli
