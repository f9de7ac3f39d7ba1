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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polysigma/oracle.hpp"

namespace polysigma {

enum class SweepMode {
  /// Exhaustive when the tuple count fits the budget, sampled otherwise.
  automatic,
  /// Exhaustive or BudgetExceeded.
  exhaustive,
  sampled,
};

struct BuildOptions {
  SweepMode mode = SweepMode::automatic;
  std::size_t budget = kDefaultBudget;
  /// Sampled tuples when an exhaustive pass would exceed the budget.
  std::size_t samples = 100'000;
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
  unsigned threads = 0;
};

struct StructureReport {
  Family family = Family::full;
  int n = 3;
  int q = 4;
  std::size_t order = 0;
  /// The order the closed formula for this family predicts; unset when it does
  /// not fit in 64 bits.
  std::optional<std::uint64_t> published_order;
  bool order_matches_claim = false;

  bool closure = false;
  bool closure_exhaustive = false;
  std::size_t closure_products = 0;

  bool associativity = false;
  bool associativity_exhaustive = false;
  /// Tuples whose bracketings were compared.
  std::size_t assoc_samples = 0;

  /// Unset for the semigroup, which has no querelement.
  std::optional<bool> querelement;
  std::size_t querelement_checks = 0;
  /// Binary inverses (pauli only).
  std::optional<bool> inverses;
  std::optional<std::string> identity;
  /// Whether `identity` acts as the identity at every position.
  std::optional<bool> identity_verified;
  /// Zero absorbs at every position (elementary only).
  std::optional<bool> zero_absorbing;

  double max_oracle_deviation = 0.0;
  /// Period of each element: least l >= 1 with g^<l> = g, where g^<l> is the
  /// product of l(n-1)+1 copies (the ordinary order for pauli). 0 when the
  /// powers never return, as for nilpotent elements.
  std::map<std::size_t, std::size_t> order_histogram;
  std::vector<std::string> notes;
  std::optional<std::string> witness;
  /// True when some check fell back to sampling.
  bool sampled = false;

  bool passed() const;
};

/// Throw DomainError for q outside kQ12 or an arity below 3.
StructureReport build_pauli_group(int q, const BuildOptions& opts = {});
StructureReport build_elementary_semigroup(int n, int q,
                                           const BuildOptions& opts = {});
StructureReport build_full_group(int n, int q, const BuildOptions& opts = {});
StructureReport build_het_group(int n, int q, const BuildOptions& opts = {});
StructureReport build_structure(Family family, int n, int q,
                                const BuildOptions& opts = {});

/// Number of rows of the complete Cayley table.
std::size_t cayley_rows(Family family, int n, int q);

/// CSV with header a1..aN,result_j,result_k,result_r. The zero label is
/// written as Z in the operand and result columns. Throws BudgetExceeded
/// when the table has more than `budget` rows.
void write_cayley_csv(std::ostream& out, Family family, int n, int q,
                      std::size_t budget = kDefaultBudget);

}  // namespace polysigma
