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

#include "ginibre_edge/fredholm.hpp"
#include "ginibre_edge/gamma_product.hpp"
#include "ginibre_edge_cli/output.hpp"
#include "ginibre_edge_cli/run_config.hpp"

namespace ginibre_edge::cli {

TailMethod tail_method(const RunConfig& c);
FredholmConfig operator_config(const RunConfig& c);

Table cmd_limit(const RunConfig& c);
Table cmd_finite(const RunConfig& c, std::ostream& warnings);
Table cmd_rate(const RunConfig& c);
Table cmd_mc(const RunConfig& c);
Table cmd_scan(const RunConfig& c);
/// Quick end-to-end checks; the "pass" column is 1 or 0.
Table cmd_selftest(const RunConfig& c);

/// Validates the config and dispatches on its command.
Table run(const RunConfig& c, std::ostream& warnings);

}  // namespace ginibre_edge::cli
