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

#include "cli.hpp"

#include <algorithm>
#include <complex>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "polysigma/errors.hpp"
#include "polysigma/oracle.hpp"
#include "polysigma/serialization.hpp"
#include "polysigma/sigma.hpp"
#include "polysigma/structures.hpp"
#include "polysigma/su2.hpp"

namespace polysigma::cli {

namespace {

struct Config {
  std::string family = "full";
  int n = 3;
  int q = 4;
  std::uint64_t seed = 42;
  std::size_t budget = kDefaultBudget;
  std::size_t samples = 100'000;
  double tol = kDefaultTol;
  std::string out;
  std::string format;
  std::string mode = "auto";
  std::string input;
  std::size_t random = 0;
  int arity = 2;
};

/// --out target or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ValidationError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Json read_json(const std::string& path) {
  if (path.empty()) throw ValidationError("--input is required");
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

void write_dense_json(std::ostream& out, Family family, int n, int q,
                      std::size_t budget) {
  const std::size_t rows = cayley_rows(family, n, q);
  if (rows > budget) {
    throw BudgetExceeded("Cayley table has " + std::to_string(rows) +
                         " rows, over the budget of " + std::to_string(budget));
  }
  Json elements = Json::array();
  const auto add = [&](const std::string& label, const DenseMatrix& m) {
    Json rows_json = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_json(m(r, c)));
      rows_json.push_back(std::move(row));
    }
    elements.push_back(Json{{"label", label}, {"dense", std::move(rows_json)}});
  };
  switch (family) {
    case Family::pauli:
      for (const auto& a : enumerate_pauli(q)) add(to_string(a), lower(a));
      break;
    case Family::elementary:
      for (const auto& a : enumerate_elementary(n, q)) add(to_string(a), lower(a));
      break;
    case Family::full:
      for (const auto& a : enumerate_full(n, q)) add(to_string(a), lower(a));
      break;
    case Family::het:
      for (const auto& a : enumerate_het(n, q)) add(to_string(a), lower(a));
      break;
    case Family::su2_params:
      throw ValidationError("su2-params has no Cayley table");
  }
  std::ostringstream csv;
  write_cayley_csv(csv, family, n, q, budget);
  Json doc{{"family", to_string(family)}, {"n", n}, {"q", q},
           {"elements", std::move(elements)}, {"table_csv", csv.str()}};
  out << doc.dump(2) << '\n';
}

int cmd_cayley(const Config& c, std::ostream& out) {
  const Family family = parse_family(c.family);
  const std::string format = c.format.empty() ? "csv" : c.format;
  Sink sink(c.out, out);
  if (format == "csv") {
    write_cayley_csv(sink.get(), family, c.n, c.q, c.budget);
  } else if (format == "dense-json") {
    write_dense_json(sink.get(), family, c.n, c.q, c.budget);
  } else {
    throw ValidationError("cayley supports --format csv or dense-json");
  }
  return kExitPass;
}

std::vector<JUnitCase> junit_cases(const StructureReport& r) {
  std::vector<JUnitCase> cases;
  const std::string w = r.witness.value_or("");
  cases.push_back({"order", true,
                   "order " + std::to_string(r.order)});
  cases.push_back({"closure", r.closure, w});
  cases.push_back({"associativity", r.associativity, w});
  if (r.identity_verified) cases.push_back({"identity", *r.identity_verified, w});
  if (r.inverses) cases.push_back({"inverses", *r.inverses, w});
  if (r.querelement) cases.push_back({"querelement", *r.querelement, w});
  if (r.zero_absorbing) cases.push_back({"zero_absorbing", *r.zero_absorbing, w});
  return cases;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const Family family = parse_family(c.family);
  BuildOptions opts;
  opts.budget = c.budget;
  opts.samples = c.samples;
  opts.seed = c.seed;
  opts.tol = c.tol;
  if (c.mode == "auto") {
    opts.mode = SweepMode::automatic;
  } else if (c.mode == "exhaustive") {
    opts.mode = SweepMode::exhaustive;
  } else if (c.mode == "sample") {
    opts.mode = SweepMode::sampled;
  } else {
    throw ValidationError("--mode must be auto, exhaustive or sample");
  }
  const StructureReport report = build_structure(family, c.n, c.q, opts);
  const std::string format = c.format.empty() ? "json" : c.format;
  Sink sink(c.out, out);
  if (format == "json") {
    sink.get() << to_json(report).dump(2) << '\n';
  } else if (format == "junit") {
    write_junit(sink.get(), "verify." + to_string(family), junit_cases(report));
  } else {
    throw ValidationError("verify supports --format json or junit");
  }
  return report.passed() ? kExitPass : kExitFailure;
}

Json tuple_result(int arity, const Json& tuple, double tol, double& worst) {
  if (!tuple.is_array()) throw ValidationError("each tuple must be an array");
  VerificationCase vc;
  vc.tolerance = tol;
  Json result;
  if (arity == 2) {
    if (tuple.size() != 2) throw ValidationError("binary tuples hold 2 elements");
    const PolyadicSU2Element a = element_from_json(tuple[0]);
    const PolyadicSU2Element b = element_from_json(tuple[1]);
    if (a.arity() != 2 || b.arity() != 2) {
      throw ValidationError("binary tuples need arity-2 elements");
    }
    const SU2Params r = binary_param_mul(a.block(0), b.block(0));
    vc.operands = std::vector<SU2Params>{a.block(0), b.block(0)};
    vc.expected = std::vector<SU2Params>{r};
    result = to_json(PolyadicSU2Element(2, {r}));
  } else {
    if (tuple.size() != 3) throw ValidationError("ternary tuples hold 3 elements");
    std::vector<SU2Params> ops;
    std::array<BlockPair, 3> pairs;
    for (std::size_t i = 0; i < 3; ++i) {
      const PolyadicSU2Element e = element_from_json(tuple[i]);
      if (e.arity() != 3) throw ValidationError("ternary tuples need arity-3 elements");
      pairs[i] = {e.block(0), e.block(1)};
      ops.push_back(e.block(0));
      ops.push_back(e.block(1));
    }
    const BlockPair r = ternary_param_mul(pairs[0], pairs[1], pairs[2]);
    vc.operands = std::move(ops);
    vc.expected = std::vector<SU2Params>{r[0], r[1]};
    result = to_json(PolyadicSU2Element(3, {r[0], r[1]}));
  }
  const VerificationOutcome o = verify(vc);
  worst = std::max(worst, o.max_abs_deviation);
  return Json{{"result", std::move(result)}, {"deviation", o.max_abs_deviation}};
}

int cmd_param_mul(const Config& c, std::ostream& out) {
  if (c.arity != 2 && c.arity != 3) throw ValidationError("--arity must be 2 or 3");
  Json tuples = Json::array();
  if (c.random > 0) {
    if (!c.input.empty()) throw ValidationError("use either --input or --random");
    std::mt19937_64 rng(c.seed);
    for (std::size_t i = 0; i < c.random; ++i) {
      Json t = Json::array();
      for (int k = 0; k < c.arity; ++k) {
        t.push_back(to_json(PolyadicSU2Element::random(c.arity, rng)));
      }
      tuples.push_back(std::move(t));
    }
  } else {
    const Json doc = read_json(c.input);
    if (!doc.is_object() || !doc.contains("tuples") || !doc["tuples"].is_array()) {
      throw ValidationError("input needs a 'tuples' array");
    }
    tuples = doc["tuples"];
  }
  double worst = 0.0;
  Json results = Json::array();
  for (const auto& t : tuples) results.push_back(tuple_result(c.arity, t, c.tol, worst));
  const bool passed = worst <= c.tol;
  Json doc{{"arity", c.arity},
           {"count", results.size()},
           {"max_deviation", worst},
           {"tolerance", c.tol},
           {"passed", passed},
           {"results", std::move(results)}};
  Sink sink(c.out, out);
  sink.get() << doc.dump(2) << '\n';
  return passed ? kExitPass : kExitFailure;
}

int cmd_trace(const Config& c, std::ostream& out) {
  const BlockCyclicMatrix m = trace_input_from_json(read_json(c.input));
  Json doc{{"arity", m.arity()},
           {"ordinary_trace", complex_json(trace(m.dense()))},
           {"polyadic_trace", complex_json(polyadic_trace(m))}};
  Sink sink(c.out, out);
  sink.get() << doc.dump(2) << '\n';
  return kExitPass;
}

int cmd_rules(const Config& c, std::ostream& out) {
  RuleFamily family;
  if (c.family == "elementary") {
    family = RuleFamily::elementary;
  } else if (c.family == "full") {
    family = RuleFamily::full;
  } else {
    throw ValidationError("rules supports --family elementary or full");
  }
  Sink sink(c.out, out);
  rule_dump_csv(sink.get(), family);
  return kExitPass;
}

void add_structure_flags(CLI::App* sub, Config& c) {
  sub->add_option("--family", c.family, "pauli, elementary, full or het")
      ->capture_default_str();
  sub->add_option("--n", c.n, "arity")->capture_default_str();
  sub->add_option("--q", c.q, "phase modulus")->capture_default_str();
  sub->add_option("--budget", c.budget, "maximum products for exhaustive work")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Polyadic Pauli-matrix structures and their dense-matrix oracle",
               "polysigma"};
  app.require_subcommand(1);

  CLI::App* cayley = app.add_subcommand("cayley", "write a complete Cayley table");
  add_structure_flags(cayley, c);
  cayley->add_option("--out", c.out, "output file");
  cayley->add_option("--format", c.format, "csv or dense-json");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify a finite structure");
  add_structure_flags(verify_cmd, c);
  verify_cmd->add_option("--mode", c.mode, "auto, exhaustive or sample")
      ->capture_default_str();
  verify_cmd->add_option("--samples", c.samples, "sampled tuples per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  verify_cmd->add_option("--tol", c.tol, "oracle tolerance")->capture_default_str();
  verify_cmd->add_option("--out", c.out, "output file");
  verify_cmd->add_option("--format", c.format, "json or junit");

  CLI::App* param = app.add_subcommand("param-mul", "closed-form parameter products");
  param->add_option("--input", c.input, "JSON file with a 'tuples' array");
  param->add_option("--random", c.random, "draw this many random tuples instead");
  param->add_option("--arity", c.arity, "2 or 3")->capture_default_str();
  param->add_option("--seed", c.seed, "seed for --random")->capture_default_str();
  param->add_option("--tol", c.tol, "oracle tolerance")->capture_default_str();
  param->add_option("--out", c.out, "output file");

  CLI::App* trace_cmd = app.add_subcommand("trace", "ordinary and polyadic trace");
  trace_cmd->add_option("--input", c.input, "element JSON")->required();
  trace_cmd->add_option("--out", c.out, "output file");

  CLI::App* rules = app.add_subcommand("rules", "dump the ternary product rules");
  rules->add_option("--family", c.family, "elementary or full")->capture_default_str();
  rules->add_option("--out", c.out, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cayley->parsed()) return cmd_cayley(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    if (param->parsed()) return cmd_param_mul(c, out);
    if (trace_cmd->parsed()) return cmd_trace(c, out);
    if (rules->parsed()) return cmd_rules(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polysigma::cli
