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

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/finite_n.hpp"
#include "ginibre_edge/fredholm.hpp"
#include "ginibre_edge/gamma_product.hpp"
#include "ginibre_edge/limit_laws.hpp"
#include "ginibre_edge/linalg.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/quadrature.hpp"
#include "ginibre_edge/rng.hpp"
#include "ginibre_edge/sampler.hpp"
#include "ginibre_edge/scaling.hpp"
#include "ginibre_edge/specfun.hpp"
#include "ginibre_edge/version.hpp"
