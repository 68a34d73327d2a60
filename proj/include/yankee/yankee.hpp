// Copyright 2026 The Authors.
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

// Everything except io.hpp, which needs nlohmann/json.

#ifndef YANKEE_YANKEE_HPP
#define YANKEE_YANKEE_HPP

#include "yankee/allocation.hpp"
#include "yankee/audit.hpp"
#include "yankee/criterion.hpp"
#include "yankee/errors.hpp"
#include "yankee/exchange.hpp"
#include "yankee/fixtures.hpp"
#include "yankee/gain.hpp"
#include "yankee/generate.hpp"
#include "yankee/good_set.hpp"
#include "yankee/matroid.hpp"
#include "yankee/oracle.hpp"
#include "yankee/solver.hpp"
#include "yankee/valuation.hpp"

#endif  // YANKEE_YANKEE_HPP
