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

#include "polysigma/serialization.hpp"

#include <string>
#include <utility>

#include "polysigma/errors.hpp"

namespace polysigma {

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) {
    throw ValidationError(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ValidationError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

Json to_json(const SU2Params& p) {
  return Json{{"x0", p.x0}, {"x", {p.x[0], p.x[1], p.x[2]}}};
}

SU2Params params_from_json(const Json& j) {
  SU2Params p;
  p.x0 = number(field(j, "x0"), "x0");
  const Json& x = field(j, "x");
  if (!x.is_array() || x.size() != 3) {
    throw ValidationError("'x' must be an array of three numbers");
  }
  for (std::size_t i = 0; i < 3; ++i) p.x[i] = number(x[i], "x component");
  validate(p);
  return p;
}

Json to_json(const PolyadicSU2Element& e) {
  Json blocks = Json::array();
  for (const auto& p : e.blocks()) blocks.push_back(to_json(p));
  return Json{{"arity", e.arity()}, {"blocks", std::move(blocks)}};
}

PolyadicSU2Element element_from_json(const Json& j) {
  const int arity = integer(field(j, "arity"), "arity");
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw ValidationError("'blocks' must be an array");
  std::vector<SU2Params> ps;
  for (const auto& b : blocks) ps.push_back(params_from_json(b));
  try {
    return {arity, std::move(ps)};
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
}

BlockCyclicMatrix trace_input_from_json(const Json& j) {
  if (j.is_object() && j.contains("identity")) {
    const int arity = integer(field(j, "arity"), "arity");
    const Json& id = j.at("identity");
    IdentitySide side = IdentitySide::left;
    if (id.contains("side")) {
      const Json& s = id.at("side");
      if (s == "left") {
        side = IdentitySide::left;
      } else if (s == "right") {
        side = IdentitySide::right;
      } else {
        throw ValidationError("identity side must be 'left' or 'right'");
      }
    }
    const Json& cs = field(id, "coeffs");
    if (!cs.is_array()) throw ValidationError("'coeffs' must be an array");
    std::vector<double> coeffs;
    for (const auto& c : cs) coeffs.push_back(number(c, "coefficient"));
    try {
      return polyadic_identity(arity, side, coeffs);
    } catch (const DomainError& e) {
      throw ValidationError(e.what());
    }
  }
  return to_matrix(element_from_json(j));
}

Json to_json(const StructureReport& r) {
  Json hist = Json::object();
  for (const auto& [k, v] : r.order_histogram) hist[std::to_string(k)] = v;
  Json j;
  j["family"] = to_string(r.family);
  j["n"] = r.n;
  j["q"] = r.q;
  j["order"] = r.order;
  j["published_order"] =
      r.published_order ? Json(*r.published_order) : Json(nullptr);
  j["order_matches_claim"] = r.order_matches_claim;
  j["closure"] = r.closure;
  j["closure_exhaustive"] = r.closure_exhaustive;
  j["closure_products"] = r.closure_products;
  j["associativity"] = r.associativity;
  j["associativity_exhaustive"] = r.associativity_exhaustive;
  j["assoc_samples"] = r.assoc_samples;
  j["querelement"] = r.querelement ? Json(*r.querelement) : Json(nullptr);
  j["querelement_checks"] = r.querelement_checks;
  j["inverses"] = r.inverses ? Json(*r.inverses) : Json(nullptr);
  j["identity"] = r.identity ? Json(*r.identity) : Json(nullptr);
  j["identity_verified"] =
      r.identity_verified ? Json(*r.identity_verified) : Json(nullptr);
  j["zero_absorbing"] = r.zero_absorbing ? Json(*r.zero_absorbing) : Json(nullptr);
  j["max_oracle_deviation"] = r.max_oracle_deviation;
  j["order_histogram"] = std::move(hist);
  j["sampled"] = r.sampled;
  j["notes"] = r.notes;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["passed"] = r.passed();
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["family"] = to_string(s.family);
  j["n"] = s.n;
  j["q"] = s.q;
  j["tuple_length"] = s.tuple_length;
  j["element_count"] = s.element_count;
  j["exhaustive"] = s.exhaustive;
  j["checked"] = s.checked;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["bracketings"] = s.bracketings;
  j["max_deviation"] = s.max_deviation;
  j["first_failure_index"] =
      s.first_failure_index ? Json(*s.first_failure_index) : Json(nullptr);
  j["witness"] = s.witness ? Json(*s.witness) : Json(nullptr);
  if (!s.exhaustive) j["seed"] = s.seed;
  return j;
}

Json to_json(const ParamSweepSummary& s) {
  return Json{{"arity", s.arity},
              {"samples", s.samples},
              {"max_deviation", s.max_deviation},
              {"max_norm_deviation", s.max_norm_deviation},
              {"passed", s.passed}};
}

void write_junit(std::ostream& out, const std::string& suite,
                 const std::vector<JUnitCase>& cases) {
  std::size_t failures = 0;
  for (const auto& c : cases) failures += c.passed ? 0 : 1;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"" << xml_escape(suite) << "\" tests=\""
      << cases.size() << "\" failures=\"" << failures << "\">\n";
  for (const auto& c : cases) {
    out << "  <testcase classname=\"" << xml_escape(suite) << "\" name=\""
        << xml_escape(c.name) << "\"";
    if (c.passed) {
      out << "/>\n";
    } else {
      out << ">\n    <failure message=\"" << xml_escape(c.message)
          << "\"/>\n  </testcase>\n";
    }
  }
  out << "</testsuite>\n";
}

}  // namespace polysigma
