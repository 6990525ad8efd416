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


#include "ginibre_edge_cli/run_config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string_view>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/limit_laws.hpp"

namespace ginibre_edge::cli {
namespace {

double parse_number(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw DomainError(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

bool one_of(const std::string& s, std::initializer_list<const char*> options) {
  return std::any_of(options.begin(), options.end(), [&](const char* o) { return s == o; });
}

}  // namespace

std::vector<double> GridSpec::points() const {
  return linear_grid(lo, hi, static_cast<std::size_t>(count));
}

std::string GridSpec::to_string() const {
  std::array<char, 64> a{};
  std::array<char, 64> b{};
  auto ra = std::to_chars(a.data(), a.data() + a.size(), lo);
  auto rb = std::to_chars(b.data(), b.data() + b.size(), hi);
  return std::string(a.data(), ra.ptr) + ":" + std::string(b.data(), rb.ptr) + ":" + std::to_string(count);
}

GridSpec GridSpec::parse(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
    throw DomainError("grid must look like lo:hi:count, got '" + text + "'");
  }
  GridSpec g;
  g.lo = parse_number(std::string_view(text).substr(0, c1), "grid lower end");
  g.hi = parse_number(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), "grid upper end");
  const double count = parse_number(std::string_view(text).substr(c2 + 1), "grid count");
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e8) {
    throw DomainError("grid count must be a positive integer");
  }
  g.count = static_cast<std::int64_t>(count);
  if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || g.lo > g.hi) {
    throw DomainError("grid needs finite lo <= hi");
  }
  return g;
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"command", c.command},
                     {"mode", c.mode},
                     {"n", c.n},
                     {"k", c.k},
                     {"alpha", c.alpha ? nlohmann::json(*c.alpha) : nlohmann::json(nullptr)},
                     {"alphas", c.alphas},
                     {"grid", c.grid ? nlohmann::json(c.grid->to_string()) : nlohmann::json(nullptr)},
                     {"tail", c.tail},
                     {"mc_samples", c.mc_samples},
                     {"samples", c.samples},
                     {"seed", c.seed},
                     {"truncation", c.truncation},
                     {"quad_order", c.quad_order},
                     {"band_eps", c.band_eps},
                     {"entry_eps", c.entry_eps},
                     {"quad_tol", c.quad_tol},
                     {"mc_stderr_budget", c.mc_stderr_budget},
                     {"fredholm", c.fredholm},
                     {"output", c.output},
                     {"format", c.format},
                     {"threads", c.threads}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  c = RunConfig{};
  j.at("command").get_to(c.command);
  j.at("mode").get_to(c.mode);
  j.at("n").get_to(c.n);
  j.at("k").get_to(c.k);
  if (const auto& a = j.at("alpha"); !a.is_null()) c.alpha = a.get<double>();
  j.at("alphas").get_to(c.alphas);
  if (const auto& g = j.at("grid"); !g.is_null()) c.grid = GridSpec::parse(g.get<std::string>());
  j.at("tail").get_to(c.tail);
  j.at("mc_samples").get_to(c.mc_samples);
  j.at("samples").get_to(c.samples);
  j.at("seed").get_to(c.seed);
  j.at("truncation").get_to(c.truncation);
  j.at("quad_order").get_to(c.quad_order);
  j.at("band_eps").get_to(c.band_eps);
  j.at("entry_eps").get_to(c.entry_eps);
  j.at("quad_tol").get_to(c.quad_tol);
  j.at("mc_stderr_budget").get_to(c.mc_stderr_budget);
  j.at("fredholm").get_to(c.fredholm);
  j.at("output").get_to(c.output);
  j.at("format").get_to(c.format);
  j.at("threads").get_to(c.threads);
}

void validate(const RunConfig& c) {
  const auto need_nk = [&] {
    if (c.n < 1 || c.k < 1) throw DomainError("--n and --k must be >= 1");
  };
  const auto need_alpha = [&] {
    if (!c.alpha || !(*c.alpha > 0.0) || !std::isfinite(*c.alpha)) {
      throw DomainError("--alpha must be a finite positive number");
    }
  };
  if (c.command == "limit") {
    if (!one_of(c.mode, {"phi-alpha", "fredholm", "gumbel", "normal"})) {
      throw DomainError("limit law must be phi-alpha, fredholm, gumbel or normal");
    }
    if (c.mode == "phi-alpha" || c.mode == "fredholm") need_alpha();
  } else if (c.command == "finite") {
    if (!one_of(c.mode, {"spectral-radius", "rightmost"})) {
      throw DomainError("statistic must be spectral-radius or rightmost");
    }
    need_nk();
    if (c.mode == "rightmost" && c.tail == "chernoff") {
      throw DomainError("chernoff tails only bound the spectral radius law");
    }
  } else if (c.command == "rate") {
    if (!one_of(c.mode, {"zero", "fixed", "infinity"})) {
      throw DomainError("regime must be zero, fixed or infinity");
    }
    need_nk();
    const double an = static_cast<double>(c.n) / static_cast<double>(c.k);
    if (c.mode == "zero" && an >= 1.0) throw DomainError("rate zero needs n/k well below 1");
    if (c.mode == "infinity" && an <= 1.0) throw DomainError("rate infinity needs n/k well above 1");
    if (c.mode == "fixed" && c.alpha) need_alpha();
  } else if (c.command == "mc") {
    need_nk();
    if (c.samples < 1) throw DomainError("--samples must be >= 1");
  } else if (c.command == "scan") {
    if (c.alphas.empty()) throw DomainError("--alphas needs at least one value");
    for (double a : c.alphas) {
      if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("every alpha must be finite and positive");
    }
  } else if (c.command != "selftest") {
    throw DomainError("unknown command '" + c.command + "'");
  }
  if (!one_of(c.tail, {"auto", "exact", "edgeworth", "chernoff", "mc"})) {
    throw DomainError("--tail must be auto, exact, edgeworth, chernoff or mc");
  }
  if (c.tail == "exact" && c.k != 1 && c.command != "limit" && c.command != "scan") {
    throw DomainError("exact tails need k = 1");
  }
  if (c.mc_samples < 1) throw DomainError("--mc-samples must be >= 1");
  if (c.truncation < 0) throw DomainError("--truncation must be >= 0");
  if (c.quad_order < 8) throw DomainError("--quad-order must be >= 8");
  if (!(c.band_eps > 0.0) || !(c.entry_eps > 0.0) || !(c.quad_tol > 0.0) || !(c.mc_stderr_budget > 0.0)) {
    throw DomainError("tolerances must be positive");
  }
  if (!one_of(c.format, {"csv", "json"})) throw DomainError("--format must be csv or json");
  if (c.threads < 0) throw DomainError("--threads must be >= 0");
}

}  // namespace ginibre_edge::cli
