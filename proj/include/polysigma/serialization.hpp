// Copyright 2026 The polysigma Authors
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

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "polysigma/oracle.hpp"
#include "polysigma/structures.hpp"
#include "polysigma/su2.hpp"

namespace polysigma {

using Json = nlohmann::ordered_json;

/// {"x0": ..., "x": [x1, x2, x3]}
Json to_json(const SU2Params& p);
/// Throws ValidationError on a malformed object or a norm violation.
SU2Params params_from_json(const Json& j);

/// {"arity": n, "blocks": [params, ...]}
Json to_json(const PolyadicSU2Element& e);
PolyadicSU2Element element_from_json(const Json& j);

/// Either an element object or {"arity": n, "identity": {"side": "left" |
/// "right", "coeffs": [...]}}.
BlockCyclicMatrix trace_input_from_json(const Json& j);

Json to_json(const StructureReport& r);
Json to_json(const SweepSummary& s);
Json to_json(const ParamSweepSummary& s);

struct JUnitCase {
  std::string name;
  bool passed = false;
  std::string message;
};

/// A single <testsuite> document.
void write_junit(std::ostream& out, const std::string& suite,
                 const std::vector<JUnitCase>& cases);

}  // namespace polysigma
