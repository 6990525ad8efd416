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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ginibre_edge::cli {

/// lo:hi:count, inclusive at both ends.
struct GridSpec {
  double lo = -5.0;
  double hi = 8.0;
  std::int64_t count = 261;

  std::vector<double> points() const;
  std::string to_string() const;
  static GridSpec parse(const std::string& text);
  bool operator==(const GridSpec&) const = default;
};

/// Everything needed to rerun a command. Written into every output header.
struct RunConfig {
  std::string command;
  /// Law, statistic or regime, depending on the command.
  std::string mode;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::optional<double> alpha;
  std::vector<double> alphas;
  std::optional<GridSpec> grid;
  /// auto | exact | edgeworth | chernoff | mc
  std::string tail = "auto";
  std::int64_t mc_samples = 1'000'000;
  std::int64_t samples = 200'000;
  std::uint64_t seed = 0;
  /// 0 selects the automatic rule.
  std::int64_t truncation = 0;
  int quad_order = 64;
  double band_eps = 1e-16;
  double entry_eps = 1e-12;
  double quad_tol = 1e-11;
  double mc_stderr_budget = 1e-3;
  bool fredholm = true;
  std::string output = "-";
  std::string format = "csv";
  int threads = 0;

  bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// Checks cross-field constraints; throws DomainError.
void validate(const RunConfig& c);

}  // namespace ginibre_edge::cli
