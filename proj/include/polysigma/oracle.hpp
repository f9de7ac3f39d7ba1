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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polysigma/matrix.hpp"
#include "polysigma/phase.hpp"
#include "polysigma/su2.hpp"

namespace polysigma {

/// exp(2 pi i r / q). Exact when r is a whole number of quarter turns.
Complex root_of_unity(int r, int q);

DenseMatrix lower(const PhasedSigmaLabel& a);
/// The zero label lowers to the zero matrix of dimension 2(n-1).
DenseMatrix lower(const PhasedElementaryLabel& a);
DenseMatrix lower(const PhasedFullLabel& a);
DenseMatrix lower(const PhasedHetLabel& a);

enum class Family { pauli, elementary, full, het, su2_params };

/// Accepts pauli, elementary, full, het, su2-params. Throws ValidationError
/// otherwise.
Family parse_family(std::string_view name);
std::string to_string(Family f);

using Operands =
    std::variant<std::vector<PhasedSigmaLabel>, std::vector<PhasedElementaryLabel>,
                 std::vector<PhasedFullLabel>, std::vector<PhasedHetLabel>,
                 std::vector<SU2Params>>;

/// For su2-params, 2 operands with 1 expected value is the binary product in
/// the su2_matrix layout; 6 operands (three block pairs) with 2 expected
/// values is the ternary product in the su2_block layout.
using Expected = std::variant<PhasedSigmaLabel, PhasedElementaryLabel,
                              PhasedFullLabel, PhasedHetLabel,
                              std::vector<SU2Params>>;

struct VerificationCase {
  Operands operands;
  Expected expected;
  double tolerance = kDefaultTol;
};

struct VerificationOutcome {
  bool passed = false;
  double max_abs_deviation = 0.0;
  /// The operand tuple, set when the case fails.
  std::optional<std::string> witness;
};

Family family_of(const VerificationCase& c);

/// Lowers the expected value and compares it entrywise with the literal
/// product of the lowered operands. Throws DomainError for inconsistent
/// operands (mixed n or q, family mismatch, bad count).
VerificationOutcome verify(const VerificationCase& c);

/// Number of sweep workers: `requested` when nonzero, else the hardware
/// concurrency; capped by the POLYSIGMA_THREADS environment variable when set.
unsigned worker_count(unsigned requested = 0);

inline constexpr std::size_t kDefaultBudget = 30'000'000;

struct SweepRequest {
  Family family = Family::full;
  int n = 3;
  int q = 4;
  /// Operands per product. Must be admissible for the family (any value >= 2
  /// for pauli).
  std::size_t tuple_length = 3;
  std::size_t budget = kDefaultBudget;
  double tol = kDefaultTol;
  unsigned threads = 0;
};

struct SweepSummary {
  Family family = Family::full;
  int n = 3;
  int q = 4;
  std::size_t tuple_length = 0;
  std::size_t element_count = 0;
  bool exhaustive = false;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Bracketings compared symbolically, counted once per tuple for which
  /// bracketing applies.
  std::size_t bracketings = 0;
  double max_deviation = 0.0;
  std::optional<std::size_t> first_failure_index;
  std::optional<std::string> witness;
  std::uint64_t seed = 0;

  bool ok() const { return failed == 0; }
};

/// Every tuple in lexicographic order over the family's enumeration. For each
/// tuple: the symbolic product must be a valid label, its lowering must match
/// the literal dense product within tol, and when the tuple is long enough all
/// single inner bracketings must agree with the flat product. Stops at the
/// first failure (lowest index, independent of the worker split). Throws
/// BudgetExceeded when count^length exceeds the budget.
SweepSummary exhaustive_sweep(const SweepRequest& request);

/// `samples` tuples; tuple i puts element (i mod count) in the first slot and
/// draws the rest from a generator seeded by (seed, i), so the result does not
/// depend on the worker split.
SweepSummary sampled_sweep(const SweepRequest& request, std::size_t samples,
                           std::uint64_t seed);

/// Per-sample generator used by the sampled sweeps.
std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t sample);

struct ParamSweepSummary {
  int arity = 2;
  std::size_t samples = 0;
  double max_deviation = 0.0;
  double max_norm_deviation = 0.0;
  bool passed = false;
};

/// Random draws through binary_param_mul (arity 2) or ternary_param_mul
/// (arity 3), checked against dense products. `norm_tol` bounds
/// |x0^2 + x^2 - 1| on the outputs.
ParamSweepSummary param_sweep(int arity, std::size_t samples,
                              std::uint64_t seed, double tol = kDefaultTol,
                              double norm_tol = 1e-10);

}  // namespace polysigma
