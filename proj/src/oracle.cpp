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

#include "polysigma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <thread>
#include <type_traits>

#include "polysigma/errors.hpp"

namespace polysigma {

Complex root_of_unity(int r, int q) {
  if (q <= 0) throw DomainError("root of unity needs q > 0");
  const long long rr = ((static_cast<long long>(r) % q) + q) % q;
  if ((4 * rr) % q == 0) return quarter_phase(static_cast<int>(4 * rr / q));
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(rr) / q);
}

DenseMatrix lower(const PhasedSigmaLabel& a) {
  validate(a);
  return dense(root_of_unity(a.r, a.q) * sigma(index(a.j)));
}

DenseMatrix lower(const PhasedElementaryLabel& a) {
  validate(a);
  if (a.zero) return DenseMatrix::zero(2 * static_cast<std::size_t>(a.n - 1));
  return (root_of_unity(a.r, a.q) * elementary(a.n, index(a.j), a.k)).dense();
}

DenseMatrix lower(const PhasedFullLabel& a) {
  validate(a);
  return (root_of_unity(a.r, a.q) * full(a.n, index(a.j))).dense();
}

DenseMatrix lower(const PhasedHetLabel& a) {
  validate(a);
  std::vector<Matrix2> blocks;
  for (std::size_t k = 0; k < a.js.size(); ++k) {
    blocks.push_back(root_of_unity(a.rs[k], a.q) * sigma(index(a.js[k])));
  }
  return BlockCyclicMatrix(a.n, std::move(blocks)).dense();
}

Family parse_family(std::string_view name) {
  if (name == "pauli") return Family::pauli;
  if (name == "elementary") return Family::elementary;
  if (name == "full") return Family::full;
  if (name == "het") return Family::het;
  if (name == "su2-params") return Family::su2_params;
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::pauli:
      return "pauli";
    case Family::elementary:
      return "elementary";
    case Family::full:
      return "full";
    case Family::het:
      return "het";
    case Family::su2_params:
      return "su2-params";
  }
  return "unknown";
}

namespace {

template <typename L>
struct Traits;

template <>
struct Traits<PhasedSigmaLabel> {
  static constexpr Family family = Family::pauli;
  static std::vector<PhasedSigmaLabel> enumerate(int, int q) {
    return enumerate_pauli(q);
  }
  static int arity(int) { return 2; }
  static bool admissible(std::size_t len, int) { return len >= 2; }
  static PhasedSigmaLabel mul(std::span<const PhasedSigmaLabel> f) {
    PhasedSigmaLabel acc = f.front();
    for (std::size_t i = 1; i < f.size(); ++i) acc = pauli_mul(acc, f[i]);
    return acc;
  }
  static void check_common(std::span<const PhasedSigmaLabel> f) {
    for (const auto& a : f) {
      if (a.q != f.front().q) throw DomainError("operands disagree on q");
    }
  }
};

template <>
struct Traits<PhasedElementaryLabel> {
  static constexpr Family family = Family::elementary;
  static std::vector<PhasedElementaryLabel> enumerate(int n, int q) {
    return enumerate_elementary(n, q);
  }
  static int arity(int n) { return n; }
  static bool admissible(std::size_t len, int n) {
    return is_valid_factor_count(len, n);
  }
  static PhasedElementaryLabel mul(std::span<const PhasedElementaryLabel> f) {
    return elementary_nary_mul(f);
  }
  static void check_common(std::span<const PhasedElementaryLabel>) {}
};

template <>
struct Traits<PhasedFullLabel> {
  static constexpr Family family = Family::full;
  static std::vector<PhasedFullLabel> enumerate(int n, int q) {
    return enumerate_full(n, q);
  }
  static int arity(int n) { return n; }
  static bool admissible(std::size_t len, int n) {
    return is_valid_factor_count(len, n);
  }
  static PhasedFullLabel mul(std::span<const PhasedFullLabel> f) {
    return full_nary_mul(f);
  }
  static void check_common(std::span<const PhasedFullLabel>) {}
};

template <>
struct Traits<PhasedHetLabel> {
  static constexpr Family family = Family::het;
  static std::vector<PhasedHetLabel> enumerate(int n, int q) {
    return polysigma::enumerate_het(n, q);
  }
  static int arity(int n) { return n; }
  static bool admissible(std::size_t len, int n) {
    return is_valid_factor_count(len, n);
  }
  static PhasedHetLabel mul(std::span<const PhasedHetLabel> f) {
    return het_nary_mul(f);
  }
  static void check_common(std::span<const PhasedHetLabel>) {}
};

template <typename L>
std::string describe(std::span<const L> f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    s += to_string(f[i]);
  }
  return s + "]";
}

DenseMatrix literal_product(std::span<const DenseMatrix> factors) {
  DenseMatrix acc = factors.front();
  DenseMatrix scratch;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    mat_mul_into(acc, factors[i], scratch);
    std::swap(acc, scratch);
  }
  return acc;
}

template <typename L>
VerificationOutcome verify_labels(const std::vector<L>& ops, const L& expected,
                                  double tol) {
  if (ops.empty()) throw DomainError("verification case has no operands");
  Traits<L>::check_common(ops);
  validate(expected);
  for (const auto& a : ops) {
    validate(a);
    if constexpr (!std::is_same_v<L, PhasedSigmaLabel>) {
      if (a.n != expected.n) throw DomainError("operands disagree on n");
    }
    if (a.q != expected.q) throw DomainError("operands disagree on q");
  }
  const int n = [&] {
    if constexpr (std::is_same_v<L, PhasedSigmaLabel>) {
      return 2;
    } else {
      return expected.n;
    }
  }();
  if (!Traits<L>::admissible(ops.size(), n)) {
    throw DomainError("operand count " + std::to_string(ops.size()) +
                      " is not admissible");
  }
  std::vector<DenseMatrix> lowered;
  for (const auto& a : ops) lowered.push_back(lower(a));
  VerificationOutcome out;
  out.max_abs_deviation = max_deviation(lower(expected), literal_product(lowered));
  out.passed = out.max_abs_deviation <= tol;
  if (!out.passed) out.witness = describe<L>(ops);
  return out;
}

std::string describe_params(const std::vector<SU2Params>& ps) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(ps[i].x0) + "," + std::to_string(ps[i].x[0]) +
         "," + std::to_string(ps[i].x[1]) + "," + std::to_string(ps[i].x[2]) +
         ")";
  }
  return s + "]";
}

VerificationOutcome verify_params(const std::vector<SU2Params>& ops,
                                  const std::vector<SU2Params>& expected,
                                  double tol) {
  VerificationOutcome out;
  if (ops.size() == 2 && expected.size() == 1) {
    const Matrix2 product = su2_matrix(ops[0]) * su2_matrix(ops[1]);
    out.max_abs_deviation = max_deviation(su2_matrix(expected[0]), product);
  } else if (ops.size() == 6 && expected.size() == 2) {
    std::vector<DenseMatrix> factors;
    for (std::size_t i = 0; i < 6; i += 2) {
      factors.push_back(
          BlockCyclicMatrix(3, {su2_block(ops[i]), su2_block(ops[i + 1])})
              .dense());
    }
    const DenseMatrix want =
        BlockCyclicMatrix(3, {su2_block(expected[0]), su2_block(expected[1])})
            .dense();
    out.max_abs_deviation = max_deviation(want, literal_product(factors));
  } else {
    throw DomainError("parameter case needs 2 operands and 1 result, or 6 "
                      "operands and 2 results");
  }
  out.passed = out.max_abs_deviation <= tol;
  if (!out.passed) out.witness = describe_params(ops);
  return out;
}

}  // namespace

Family family_of(const VerificationCase& c) {
  switch (c.operands.index()) {
    case 0:
      return Family::pauli;
    case 1:
      return Family::elementary;
    case 2:
      return Family::full;
    case 3:
      return Family::het;
    default:
      return Family::su2_params;
  }
}

VerificationOutcome verify(const VerificationCase& c) {
  if (!(c.tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (c.operands.index() != c.expected.index()) {
    throw DomainError("operands and expected value belong to different families");
  }
  switch (c.operands.index()) {
    case 0:
      return verify_labels(std::get<0>(c.operands), std::get<0>(c.expected),
                           c.tolerance);
    case 1:
      return verify_labels(std::get<1>(c.operands), std::get<1>(c.expected),
                           c.tolerance);
    case 2:
      return verify_labels(std::get<2>(c.operands), std::get<2>(c.expected),
                           c.tolerance);
    case 3:
      return verify_labels(std::get<3>(c.operands), std::get<3>(c.expected),
                           c.tolerance);
    default:
      return verify_params(std::get<4>(c.operands), std::get<4>(c.expected),
                           c.tolerance);
  }
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested > 0 ? requested
                             : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POLYSIGMA_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t sample) {
  return std::mt19937_64(seed + 0x9E3779B97F4A7C15ULL * (sample + 1));
}

namespace {

struct SliceResult {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t bracketings = 0;
  double max_deviation = 0.0;
  std::optional<std::size_t> failure;
  std::optional<std::string> witness;
};

using TupleAt = std::function<void(std::size_t, std::vector<std::size_t>&)>;

template <typename L>
class SweepEngine {
 public:
  SweepEngine(const SweepRequest& req)
      : req_(req),
        labels_(Traits<L>::enumerate(req.n, req.q)),
        arity_(Traits<L>::arity(req.n)) {
    if (!Traits<L>::admissible(req.tuple_length, req.n)) {
      throw ArityError("tuple length " + std::to_string(req.tuple_length) +
                       " is not admissible for " + to_string(req.family));
    }
    lowered_.reserve(labels_.size());
    for (const auto& a : labels_) lowered_.push_back(lower(a));
  }

  std::size_t count() const { return labels_.size(); }

  SliceResult run_slice(std::size_t begin, std::size_t end,
                        const TupleAt& tuple_at) const {
    SliceResult res;
    std::vector<std::size_t> idx(req_.tuple_length);
    std::vector<L> ops(req_.tuple_length);
    std::vector<L> outer;
    DenseMatrix acc, scratch;
    for (std::size_t i = begin; i < end; ++i) {
      tuple_at(i, idx);
      for (std::size_t s = 0; s < idx.size(); ++s) ops[s] = labels_[idx[s]];
      ++res.checked;
      std::string problem;
      double dev = 0.0;
      const L flat = Traits<L>::mul(ops);
      bool ok = true;
      std::size_t at = 0;
      try {
        validate(flat);
        at = label_index(flat);
        if (at >= labels_.size() || !(labels_[at] == flat)) {
          ok = false;
          problem = "product left the label set";
        }
      } catch (const DomainError&) {
        ok = false;
        problem = "product is not a valid label";
      }
      if (ok) {
        acc = lowered_[idx[0]];
        for (std::size_t s = 1; s < idx.size(); ++s) {
          mat_mul_into(acc, lowered_[idx[s]], scratch);
          std::swap(acc, scratch);
        }
        dev = max_deviation(lowered_[at], acc);
        res.max_deviation = std::max(res.max_deviation, dev);
        if (dev > req_.tol) {
          ok = false;
          problem = "oracle deviation " + std::to_string(dev);
        }
      }
      const std::size_t len = ops.size();
      const std::size_t a = static_cast<std::size_t>(arity_);
      if (ok && len >= 2 * a - 1) {
        ++res.bracketings;
        for (std::size_t p = 0; p + a <= len && ok; ++p) {
          outer.assign(ops.begin(), ops.begin() + static_cast<long>(p));
          outer.push_back(Traits<L>::mul(std::span<const L>(ops).subspan(p, a)));
          outer.insert(outer.end(), ops.begin() + static_cast<long>(p + a),
                       ops.end());
          if (!(Traits<L>::mul(outer) == flat)) {
            ok = false;
            problem = "bracketing at position " + std::to_string(p) +
                      " disagrees";
          }
        }
      }
      if (!ok) {
        res.failure = i;
        res.witness = describe<L>(ops) + ": " + problem;
        return res;
      }
      ++res.passed;
    }
    return res;
  }

 private:
  SweepRequest req_;
  std::vector<L> labels_;
  std::vector<DenseMatrix> lowered_;
  int arity_;
};

SweepSummary aggregate(const SweepRequest& req, std::size_t count,
                       std::vector<SliceResult> slices) {
  SweepSummary s;
  s.family = req.family;
  s.n = req.n;
  s.q = req.q;
  s.tuple_length = req.tuple_length;
  s.element_count = count;
  for (const auto& r : slices) {
    s.checked += r.checked;
    s.passed += r.passed;
    s.bracketings += r.bracketings;
    s.max_deviation = std::max(s.max_deviation, r.max_deviation);
    if (r.failure) {
      s.failed = 1;
      s.first_failure_index = r.failure;
      s.witness = r.witness;
      break;
    }
  }
  return s;
}

template <typename L>
SweepSummary run_sweep(const SweepRequest& req, std::size_t total,
                       const TupleAt& tuple_at, std::size_t element_count,
                       const SweepEngine<L>& engine) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(req.threads),
                                                   std::max<std::size_t>(total, 1)));
  std::vector<SliceResult> slices(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  if (workers == 1) {
    slices[0] = engine.run_slice(0, total, tuple_at);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        slices[w] = engine.run_slice(begin, end, tuple_at);
      });
    }
    for (auto& t : pool) t.join();
  }
  return aggregate(req, element_count, std::move(slices));
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

template <typename L>
SweepSummary exhaustive_impl(const SweepRequest& req) {
  const SweepEngine<L> engine(req);
  const std::size_t count = engine.count();
  const std::size_t total = checked_power(count, req.tuple_length, req.budget);
  if (total > req.budget) {
    throw BudgetExceeded(std::to_string(count) + "^" +
                         std::to_string(req.tuple_length) +
                         " products exceed the budget of " +
                         std::to_string(req.budget) + "; use sampling");
  }
  const std::size_t len = req.tuple_length;
  const TupleAt tuple_at = [count, len](std::size_t i,
                                        std::vector<std::size_t>& idx) {
    for (std::size_t s = len; s-- > 0;) {
      idx[s] = i % count;
      i /= count;
    }
  };
  SweepSummary s = run_sweep<L>(req, total, tuple_at, count, engine);
  s.exhaustive = true;
  return s;
}

template <typename L>
SweepSummary sampled_impl(const SweepRequest& req, std::size_t samples,
                          std::uint64_t seed) {
  const SweepEngine<L> engine(req);
  const std::size_t count = engine.count();
  const TupleAt tuple_at = [count, seed](std::size_t i,
                                         std::vector<std::size_t>& idx) {
    std::mt19937_64 rng = sample_rng(seed, i);
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    idx[0] = i % count;
    for (std::size_t s = 1; s < idx.size(); ++s) idx[s] = pick(rng);
  };
  SweepSummary s = run_sweep<L>(req, samples, tuple_at, count, engine);
  s.exhaustive = false;
  s.seed = seed;
  return s;
}

}  // namespace

SweepSummary exhaustive_sweep(const SweepRequest& req) {
  switch (req.family) {
    case Family::pauli:
      return exhaustive_impl<PhasedSigmaLabel>(req);
    case Family::elementary:
      return exhaustive_impl<PhasedElementaryLabel>(req);
    case Family::full:
      return exhaustive_impl<PhasedFullLabel>(req);
    case Family::het:
      return exhaustive_impl<PhasedHetLabel>(req);
    case Family::su2_params:
      break;
  }
  throw DomainError("su2-params has no finite label set to sweep");
}

SweepSummary sampled_sweep(const SweepRequest& req, std::size_t samples,
                           std::uint64_t seed) {
  switch (req.family) {
    case Family::pauli:
      return sampled_impl<PhasedSigmaLabel>(req, samples, seed);
    case Family::elementary:
      return sampled_impl<PhasedElementaryLabel>(req, samples, seed);
    case Family::full:
      return sampled_impl<PhasedFullLabel>(req, samples, seed);
    case Family::het:
      return sampled_impl<PhasedHetLabel>(req, samples, seed);
    case Family::su2_params:
      break;
  }
  throw DomainError("su2-params has no finite label set to sample");
}

ParamSweepSummary param_sweep(int arity, std::size_t samples,
                              std::uint64_t seed, double tol,
                              double norm_tol) {
  if (arity != 2 && arity != 3) {
    throw DomainError("parameter products exist for arity 2 and 3 only");
  }
  ParamSweepSummary s;
  s.arity = arity;
  s.samples = samples;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    VerificationCase c;
    std::vector<SU2Params> ops;
    std::vector<SU2Params> out;
    if (arity == 2) {
      ops = {random_su2(rng), random_su2(rng)};
      out = {binary_param_mul(ops[0], ops[1])};
    } else {
      for (int k = 0; k < 6; ++k) ops.push_back(random_su2(rng));
      const BlockPair r = ternary_param_mul({ops[0], ops[1]}, {ops[2], ops[3]},
                                            {ops[4], ops[5]});
      out = {r[0], r[1]};
    }
    for (const auto& p : out) {
      s.max_norm_deviation =
          std::max(s.max_norm_deviation, std::abs(norm_squared(p) - 1.0));
    }
    c.operands = std::move(ops);
    c.expected = std::move(out);
    c.tolerance = tol;
    const VerificationOutcome o = verify(c);
    s.max_deviation = std::max(s.max_deviation, o.max_abs_deviation);
  }
  s.passed = s.max_deviation <= tol && s.max_norm_deviation <= norm_tol;
  return s;
}

}  // namespace polysigma
