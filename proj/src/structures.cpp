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

#include "polysigma/structures.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <string>
#include <type_traits>

#include "polysigma/errors.hpp"

namespace polysigma {

bool StructureReport::passed() const {
  return closure && associativity && querelement.value_or(true) &&
         inverses.value_or(true) && zero_absorbing.value_or(true) &&
         identity_verified.value_or(true);
}

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && v > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::nullopt;
    }
    v *= base;
  }
  return v;
}

std::size_t power_or_cap(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

SweepSummary sweep(Family family, int n, int q, std::size_t length,
                   std::size_t count, const BuildOptions& opts) {
  SweepRequest req;
  req.family = family;
  req.n = n;
  req.q = q;
  req.tuple_length = length;
  req.budget = opts.budget;
  req.tol = opts.tol;
  req.threads = opts.threads;
  if (opts.mode == SweepMode::exhaustive ||
      (opts.mode == SweepMode::automatic &&
       power_or_cap(count, length, opts.budget) <= opts.budget)) {
    return exhaustive_sweep(req);
  }
  return sampled_sweep(req, opts.samples, opts.seed);
}

void apply_sweeps(StructureReport& rep, const SweepSummary& closure,
                  const SweepSummary& assoc) {
  rep.closure = closure.ok();
  rep.closure_exhaustive = closure.exhaustive;
  rep.closure_products = closure.checked;
  rep.associativity = assoc.ok();
  rep.associativity_exhaustive = assoc.exhaustive;
  rep.assoc_samples = assoc.bracketings;
  rep.max_oracle_deviation =
      std::max({rep.max_oracle_deviation, closure.max_deviation, assoc.max_deviation});
  rep.sampled = !closure.exhaustive || !assoc.exhaustive;
  if (!rep.witness && closure.witness) rep.witness = "closure: " + *closure.witness;
  if (!rep.witness && assoc.witness) rep.witness = "associativity: " + *assoc.witness;
}

DenseMatrix literal_product(const std::vector<DenseMatrix>& f) {
  DenseMatrix acc = f.front();
  for (std::size_t i = 1; i < f.size(); ++i) acc = mat_mul(acc, f[i]);
  return acc;
}

/// Least l >= 1 with g^<l> = g, scanning at most `limit` powers.
template <typename L, typename Mul>
std::size_t period(const L& g, int n, std::size_t limit, Mul mul) {
  std::vector<L> ops(static_cast<std::size_t>(n), g);
  L power = mul(ops);
  for (std::size_t l = 1; l <= limit; ++l) {
    if (power == g) return l;
    ops[0] = power;
    power = mul(ops);
  }
  return 0;
}

/// With `ends_only` the identity is checked as a left and right identity, at
/// the last and first positions.
template <typename L, typename Mul>
void check_identity(StructureReport& rep, const std::vector<L>& labels,
                    const L& e, int n, Mul mul, double tol, bool ends_only = false) {
  bool ok = true;
  const DenseMatrix de = lower(e);
  for (const auto& g : labels) {
    const DenseMatrix dg = lower(g);
    for (int p = 0; p < n && ok; ++p) {
      if (ends_only && p != 0 && p != n - 1) continue;
      std::vector<L> ops(static_cast<std::size_t>(n), e);
      std::vector<DenseMatrix> dense_ops(static_cast<std::size_t>(n), de);
      ops[static_cast<std::size_t>(p)] = g;
      dense_ops[static_cast<std::size_t>(p)] = dg;
      const double dev = max_deviation(dg, literal_product(dense_ops));
      rep.max_oracle_deviation = std::max(rep.max_oracle_deviation, dev);
      if (!(mul(std::span<const L>(ops)) == g) || dev > tol) {
        ok = false;
        if (!rep.witness) {
          rep.witness = "identity " + to_string(e) + " fails on " + to_string(g) +
                        " at position " + std::to_string(p);
        }
      }
    }
  }
  rep.identity = to_string(e);
  rep.identity_verified = ok;
}

/// mu[g, ..., g] with the querelement at each position returns g, symbolically
/// and through the oracle; the querelement stays inside the label set.
template <typename L, typename Mul, typename Quer>
void check_querelement(StructureReport& rep, const std::vector<L>& labels, int n,
                       Mul mul, Quer quer, double tol) {
  bool ok = true;
  for (const auto& g : labels) {
    const L t = quer(g);
    const std::size_t at = label_index(t);
    if (at >= labels.size() || !(labels[at] == t)) {
      ok = false;
      if (!rep.witness) rep.witness = "querelement of " + to_string(g) + " left the set";
      continue;
    }
    const DenseMatrix dg = lower(g);
    const DenseMatrix dt = lower(t);
    for (int p = 0; p < n; ++p) {
      std::vector<L> ops(static_cast<std::size_t>(n), g);
      std::vector<DenseMatrix> dense_ops(static_cast<std::size_t>(n), dg);
      ops[static_cast<std::size_t>(p)] = t;
      dense_ops[static_cast<std::size_t>(p)] = dt;
      ++rep.querelement_checks;
      const double dev = max_deviation(dg, literal_product(dense_ops));
      rep.max_oracle_deviation = std::max(rep.max_oracle_deviation, dev);
      if (!(mul(std::span<const L>(ops)) == g) || dev > tol) {
        ok = false;
        if (!rep.witness) {
          rep.witness = "querelement " + to_string(t) + " of " + to_string(g) +
                        " fails at position " + std::to_string(p);
        }
      }
    }
  }
  rep.querelement = ok;
}

void require_nary_arity(int n) {
  if (n < 3) throw DomainError("n-ary structures need n >= 3, got " + std::to_string(n));
}

}  // namespace

StructureReport build_pauli_group(int q, const BuildOptions& opts) {
  PhaseModulus{q};
  StructureReport rep;
  rep.family = Family::pauli;
  rep.n = 2;
  rep.q = q;
  const auto labels = enumerate_pauli(q);
  rep.order = labels.size();
  rep.published_order = 4ULL * static_cast<std::uint64_t>(q);
  rep.order_matches_claim = rep.order == *rep.published_order;

  const auto closure = sweep(Family::pauli, 2, q, 2, labels.size(), opts);
  const auto assoc = sweep(Family::pauli, 2, q, 3, labels.size(), opts);
  apply_sweeps(rep, closure, assoc);

  const auto mul = [](std::span<const PhasedSigmaLabel> f) {
    PhasedSigmaLabel acc = f.front();
    for (std::size_t i = 1; i < f.size(); ++i) acc = pauli_mul(acc, f[i]);
    return acc;
  };
  const PhasedSigmaLabel e = pauli_identity(q);
  check_identity(rep, labels, e, 2, mul, opts.tol);

  bool inverses_ok = true;
  const DenseMatrix id = DenseMatrix::identity(2);
  for (const auto& g : labels) {
    const PhasedSigmaLabel inv = pauli_inverse(g);
    const double dev = std::max(max_deviation(mat_mul(lower(g), lower(inv)), id),
                                max_deviation(mat_mul(lower(inv), lower(g)), id));
    rep.max_oracle_deviation = std::max(rep.max_oracle_deviation, dev);
    if (!(pauli_mul(g, inv) == e) || !(pauli_mul(inv, g) == e) || dev > opts.tol) {
      inverses_ok = false;
      if (!rep.witness) rep.witness = "no inverse for " + to_string(g);
    }
    // Ordinary element order.
    std::size_t order = 0;
    PhasedSigmaLabel p = g;
    for (std::size_t k = 1; k <= labels.size(); ++k) {
      if (p == e) {
        order = k;
        break;
      }
      p = pauli_mul(p, g);
    }
    ++rep.order_histogram[order];
  }
  rep.inverses = inverses_ok;
  return rep;
}

StructureReport build_elementary_semigroup(int n, int q, const BuildOptions& opts) {
  PhaseModulus{q};
  require_nary_arity(n);
  StructureReport rep;
  rep.family = Family::elementary;
  rep.n = n;
  rep.q = q;
  const auto labels = enumerate_elementary(n, q);
  rep.order = labels.size();
  rep.published_order = 4ULL * static_cast<std::uint64_t>(q) *
                                static_cast<std::uint64_t>(n - 1) + 1;
  rep.order_matches_claim = rep.order == *rep.published_order;

  const std::size_t nn = static_cast<std::size_t>(n);
  const auto closure = sweep(Family::elementary, n, q, nn, labels.size(), opts);
  const auto assoc = sweep(Family::elementary, n, q, 2 * nn - 1, labels.size(), opts);
  apply_sweeps(rep, closure, assoc);

  const auto zero = PhasedElementaryLabel::make_zero(q, n);
  bool absorbing = true;
  for (const auto& g : labels) {
    for (std::size_t p = 0; p < nn; ++p) {
      std::vector<PhasedElementaryLabel> ops(nn, g);
      ops[p] = zero;
      if (!(elementary_nary_mul(ops) == zero)) {
        absorbing = false;
        if (!rep.witness) rep.witness = "zero does not absorb " + to_string(g);
      }
    }
    ++rep.order_histogram[period(g, n, labels.size(),
                                 [](const std::vector<PhasedElementaryLabel>& f) {
                                   return elementary_nary_mul(f);
                                 })];
  }
  rep.zero_absorbing = absorbing;
  rep.notes.push_back("semigroup with adjoined zero; no querelement or identity");
  return rep;
}

StructureReport build_full_group(int n, int q, const BuildOptions& opts) {
  PhaseModulus{q};
  require_nary_arity(n);
  StructureReport rep;
  rep.family = Family::full;
  rep.n = n;
  rep.q = q;
  const auto labels = enumerate_full(n, q);
  rep.order = labels.size();
  rep.published_order = 4ULL * static_cast<std::uint64_t>(q);
  rep.order_matches_claim = rep.order == *rep.published_order;

  const std::size_t nn = static_cast<std::size_t>(n);
  const auto closure = sweep(Family::full, n, q, nn, labels.size(), opts);
  const auto assoc = sweep(Family::full, n, q, 2 * nn - 1, labels.size(), opts);
  apply_sweeps(rep, closure, assoc);

  const auto mul = [](std::span<const PhasedFullLabel> f) { return full_nary_mul(f); };
  check_identity(rep, labels, PhasedFullLabel{q, n, Sigma::s0, 0}, n, mul, opts.tol);
  check_querelement(rep, labels, n, mul,
                    [](const PhasedFullLabel& g) { return full_querelement(g); },
                    opts.tol);
  for (const auto& g : labels) {
    ++rep.order_histogram[period(g, n, labels.size(),
                                 [](const std::vector<PhasedFullLabel>& f) {
                                   return full_nary_mul(f);
                                 })];
  }
  rep.notes.push_back("querelement phase index is (2-n) r mod q");
  return rep;
}

StructureReport build_het_group(int n, int q, const BuildOptions& opts) {
  PhaseModulus{q};
  require_nary_arity(n);
  StructureReport rep;
  rep.family = Family::het;
  rep.n = n;
  rep.q = q;
  const std::size_t expected = power_or_cap(4 * static_cast<std::size_t>(q),
                                            static_cast<std::size_t>(n - 1),
                                            opts.budget);
  if (expected > opts.budget) {
    throw BudgetExceeded("the heterogeneous label set has more than " +
                         std::to_string(opts.budget) + " elements");
  }
  const auto labels = enumerate_het(n, q);
  rep.order = labels.size();
  rep.published_order =
      checked_pow(4ULL * static_cast<std::uint64_t>(q) *
                      static_cast<std::uint64_t>(n - 1),
                  4);
  rep.order_matches_claim =
      rep.published_order && rep.order == *rep.published_order;

  const std::size_t nn = static_cast<std::size_t>(n);
  const auto closure = sweep(Family::het, n, q, nn, labels.size(), opts);
  const auto assoc = sweep(Family::het, n, q, 2 * nn - 1, labels.size(), opts);
  apply_sweeps(rep, closure, assoc);

  const auto mul = [](std::span<const PhasedHetLabel> f) { return het_nary_mul(f); };
  const std::size_t m = static_cast<std::size_t>(n - 1);
  check_identity(rep, labels,
                 PhasedHetLabel{q, n, std::vector<Sigma>(m, Sigma::s0),
                                std::vector<int>(m, 0)},
                 n, mul, opts.tol, true);
  rep.notes.push_back(
      "identity checked at the first and last positions; it is not a middle "
      "identity for elements with unequal blocks");
  check_querelement(rep, labels, n, mul,
                    [n](const PhasedHetLabel& g) {
                      return n == 3 ? het_querelement(g)
                                    : het_querelement_blockwise(g);
                    },
                    opts.tol);
  if (n == 3) {
    // The slot-swap querelement must be the two-sided dense inverse.
    const DenseMatrix id = DenseMatrix::identity(2 * m);
    bool inverse_ok = true;
    for (const auto& g : labels) {
      const DenseMatrix dg = lower(g);
      const DenseMatrix dt = lower(het_querelement(g));
      const double dev = std::max(max_deviation(mat_mul(dg, dt), id),
                                  max_deviation(mat_mul(dt, dg), id));
      rep.max_oracle_deviation = std::max(rep.max_oracle_deviation, dev);
      if (dev > opts.tol) {
        inverse_ok = false;
        if (!rep.witness) rep.witness = "querelement of " + to_string(g) + " is not its inverse";
      }
    }
    rep.querelement = *rep.querelement && inverse_ok;
  }
  for (const auto& g : labels) {
    ++rep.order_histogram[period(g, n, labels.size(),
                                 [](const std::vector<PhasedHetLabel>& f) {
                                   return het_nary_mul(f);
                                 })];
  }
  if (!rep.order_matches_claim) {
    rep.notes.push_back(
        "enumerated order " + std::to_string(rep.order) +
        " differs from the closed-form claim " +
        (rep.published_order ? std::to_string(*rep.published_order)
                                 : std::string("(overflow)")) +
        "; the enumerated set is the one verified");
  }
  return rep;
}

StructureReport build_structure(Family family, int n, int q, const BuildOptions& opts) {
  switch (family) {
    case Family::pauli:
      return build_pauli_group(q, opts);
    case Family::elementary:
      return build_elementary_semigroup(n, q, opts);
    case Family::full:
      return build_full_group(n, q, opts);
    case Family::het:
      return build_het_group(n, q, opts);
    case Family::su2_params:
      break;
  }
  throw DomainError("su2-params is not a finite structure");
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return '"' + s + '"';
}

template <typename L>
void write_table(std::ostream& out, const std::vector<L>& labels, std::size_t len,
                 std::size_t total) {
  for (std::size_t s = 0; s < len; ++s) out << 'a' << (s + 1) << ',';
  out << "result_j,result_k,result_r\n";
  std::vector<std::size_t> idx(len);
  std::vector<L> ops(len);
  const std::size_t count = labels.size();
  std::vector<std::string> cells;
  cells.reserve(count);
  for (const auto& l : labels) cells.push_back(csv_cell(to_string(l)) + ',');
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    for (std::size_t s = len; s-- > 0;) {
      idx[s] = rest % count;
      rest /= count;
    }
    for (std::size_t s = 0; s < len; ++s) {
      ops[s] = labels[idx[s]];
      out << cells[idx[s]];
    }
    if constexpr (std::is_same_v<L, PhasedSigmaLabel>) {
      PhasedSigmaLabel acc = ops[0];
      for (std::size_t s = 1; s < len; ++s) acc = pauli_mul(acc, ops[s]);
      out << index(acc.j) << ",," << acc.r << '\n';
    } else if constexpr (std::is_same_v<L, PhasedElementaryLabel>) {
      const auto r = elementary_nary_mul(ops);
      if (r.zero) {
        out << "Z,Z,Z\n";
      } else {
        out << index(r.j) << ',' << r.k << ',' << r.r << '\n';
      }
    } else if constexpr (std::is_same_v<L, PhasedFullLabel>) {
      const auto r = full_nary_mul(ops);
      out << index(r.j) << ",," << r.r << '\n';
    } else {
      const auto r = het_nary_mul(ops);
      for (std::size_t k = 0; k < r.js.size(); ++k) out << (k ? " " : "") << index(r.js[k]);
      out << ",,";
      for (std::size_t k = 0; k < r.rs.size(); ++k) out << (k ? " " : "") << r.rs[k];
      out << '\n';
    }
  }
}

std::size_t family_count(Family family, int n, int q) {
  PhaseModulus{q};
  switch (family) {
    case Family::pauli:
      return 4 * static_cast<std::size_t>(q);
    case Family::elementary:
      require_nary_arity(n);
      return 4 * static_cast<std::size_t>(q) * static_cast<std::size_t>(n - 1) + 1;
    case Family::full:
      require_nary_arity(n);
      return 4 * static_cast<std::size_t>(q);
    case Family::het: {
      require_nary_arity(n);
      return power_or_cap(4 * static_cast<std::size_t>(q),
                          static_cast<std::size_t>(n - 1),
                          std::numeric_limits<std::size_t>::max() / 2);
    }
    case Family::su2_params:
      break;
  }
  throw DomainError("su2-params has no Cayley table");
}

}  // namespace

std::size_t cayley_rows(Family family, int n, int q) {
  const std::size_t count = family_count(family, n, q);
  const std::size_t len = family == Family::pauli ? 2 : static_cast<std::size_t>(n);
  return power_or_cap(count, len, std::numeric_limits<std::size_t>::max() / 2);
}

void write_cayley_csv(std::ostream& out, Family family, int n, int q,
                      std::size_t budget) {
  const std::size_t rows = cayley_rows(family, n, q);
  if (rows > budget) {
    throw BudgetExceeded("Cayley table has " + std::to_string(rows) +
                         " rows, over the budget of " + std::to_string(budget));
  }
  switch (family) {
    case Family::pauli:
      write_table(out, enumerate_pauli(q), 2, rows);
      return;
    case Family::elementary:
      write_table(out, enumerate_elementary(n, q), static_cast<std::size_t>(n), rows);
      return;
    case Family::full:
      write_table(out, enumerate_full(n, q), static_cast<std::size_t>(n), rows);
      return;
    case Family::het:
      write_table(out, enumerate_het(n, q), static_cast<std::size_t>(n), rows);
      return;
    case Family::su2_params:
      break;
  }
  throw DomainError("su2-params has no Cayley table");
}

}  // namespace polysigma
