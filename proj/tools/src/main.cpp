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


#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/version.hpp"
#include "ginibre_edge_cli/commands.hpp"

namespace {

namespace cli = ginibre_edge::cli;

constexpr int kUsage = 2;
constexpr int kNumerical = 3;

struct Flags {
  cli::RunConfig config;
  double alpha = 0.0;
  std::string grid;
  std::string alphas;
};

void add_common(CLI::App* sub, Flags& f, bool grid) {
  sub->add_option("-o,--output", f.config.output, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", f.config.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  if (grid) sub->add_option("--grid", f.grid, "x grid as lo:hi:count");
}

void add_ensemble(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.config.n, "Matrix size")->required();
  sub->add_option("--k", f.config.k, "Number of factors")->required();
  sub->add_option("--tail", f.config.tail, "auto, exact, edgeworth, chernoff or mc")->capture_default_str();
  sub->add_option("--mc-samples", f.config.mc_samples, "Samples per factor for mc tails")->capture_default_str();
  sub->add_option("--seed", f.config.seed, "Random seed")->capture_default_str();
}

void add_operator(CLI::App* sub, Flags& f) {
  sub->add_option("--truncation", f.config.truncation, "Operator size, 0 for automatic")->capture_default_str();
  sub->add_option("--quad-order", f.config.quad_order, "Base Gauss-Legendre order")->capture_default_str();
  sub->add_option("--band-eps", f.config.band_eps)->capture_default_str();
  sub->add_option("--entry-eps", f.config.entry_eps)->capture_default_str();
  sub->add_option("--quad-tol", f.config.quad_tol)->capture_default_str();
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ginibre_edge::DomainError("cannot parse alpha '" + item + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int thread_setting(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("GINIBRE_EDGE_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring GINIBRE_EDGE_THREADS='" << env << "'\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge statistics of products of Ginibre matrices"};
  app.set_version_flag("--version", std::string(ginibre_edge::kVersion));
  app.require_subcommand(1);
  Flags f;
  app.add_option("--threads", f.config.threads, "Worker threads (0: GINIBRE_EDGE_THREADS or all cores)");

  auto* limit = app.add_subcommand("limit", "Limiting distribution functions");
  limit->add_option("law", f.config.mode, "phi-alpha, fredholm, gumbel or normal")->required();
  limit->add_option("--alpha", f.alpha, "Limit parameter");
  add_common(limit, f, true);
  add_operator(limit, f);

  auto* finite = app.add_subcommand("finite", "Exact finite-n distribution functions");
  finite->add_option("statistic", f.config.mode, "spectral-radius or rightmost")->required();
  add_ensemble(finite, f);
  add_operator(finite, f);
  finite->add_option("--mc-stderr-budget", f.config.mc_stderr_budget)->capture_default_str();
  add_common(finite, f, true);

  auto* rate = app.add_subcommand("rate", "Measured versus predicted convergence rates");
  rate->add_option("regime", f.config.mode, "zero, fixed or infinity")->required();
  rate->add_option("--alpha", f.alpha, "Limit parameter for the fixed regime (default n/k)");
  add_ensemble(rate, f);
  add_common(rate, f, true);

  auto* mc = app.add_subcommand("mc", "Monte Carlo spectral radius against the exact law");
  add_ensemble(mc, f);
  mc->add_option("--samples", f.config.samples, "Number of matrix products simulated")->capture_default_str();
  add_common(mc, f, true);

  auto* scan = app.add_subcommand("scan", "Sweep alpha through the transition");
  scan->add_option("--alphas", f.alphas, "Comma-separated alphas")->required();
  scan->add_flag("!--no-fredholm", f.config.fredholm, "Skip the rightmost-eigenvalue law");
  add_common(scan, f, true);
  add_operator(scan, f);

  auto* selftest = app.add_subcommand("selftest", "Fast internal consistency checks");
  add_common(selftest, f, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  auto& c = f.config;
  try {
    c.command = app.get_subcommands().front()->get_name();
    for (auto* sub : {limit, rate}) {
      if (sub->parsed() && sub->count("--alpha") > 0) c.alpha = f.alpha;
    }
    if (!f.grid.empty()) c.grid = cli::GridSpec::parse(f.grid);
    if (!f.alphas.empty()) c.alphas = parse_list(f.alphas);
    ginibre_edge::set_thread_count(thread_setting(c.threads));
    const auto table = cli::run(c, std::cerr);
    cli::write(c, table);
    if (c.command == "selftest") {
      for (const auto& row : table.rows) {
        if (row.back() != 1.0) return kNumerical;
      }
    }
  } catch (const ginibre_edge::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ginibre_edge::NumericalQualityError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
