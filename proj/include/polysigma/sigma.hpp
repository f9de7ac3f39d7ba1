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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "polysigma/matrix.hpp"
#include "polysigma/su2.hpp"

namespace polysigma {

enum class Sigma : std::uint8_t { s0 = 0, s1 = 1, s2 = 2, s3 = 3 };

/// Throws DomainError for j outside 0..3.
Sigma to_sigma(int j);
constexpr int index(Sigma s) { return static_cast<int>(s); }

/// epsilon_abc for a, b, c in 1..3; 0 for a repeated or out-of-range index.
int levi_civita(int a, int b, int c);

/// i^quarter_turns * sigma. quarter_turns is kept in 0..3.
struct SignedSigma {
  Sigma sigma = Sigma::s0;
  int quarter_turns = 0;

  friend bool operator==(const SignedSigma&, const SignedSigma&) = default;
};

/// sigma_a sigma_b = i^t sigma_c, exact.
SignedSigma multiply(Sigma a, Sigma b);
SignedSigma multiply(SignedSigma a, Sigma b);
/// Left-to-right product; the empty product is sigma_0.
SignedSigma multiply_all(std::span<const Sigma> factors);

/// i^turns with exact components.
Complex quarter_phase(int turns);
Matrix2 lower(const SignedSigma& s);

/// sigma_j placed at block position k (1-based) of an arity-n cyclic matrix.
struct ElementarySigma {
  int arity = 3;
  Sigma j = Sigma::s0;
  int k = 1;

  friend bool operator==(const ElementarySigma&,
                         const ElementarySigma&) = default;
};

struct SignedElementary {
  ElementarySigma value;
  int quarter_turns = 0;

  friend bool operator==(const SignedElementary&,
                         const SignedElementary&) = default;
};

struct SignedFull {
  int arity = 3;
  Sigma j = Sigma::s0;
  int quarter_turns = 0;

  friend bool operator==(const SignedFull&, const SignedFull&) = default;
};

/// Blocks (j_1, ..., j_{n-1}).
struct HetSigma {
  int arity = 3;
  std::vector<Sigma> js;

  friend bool operator==(const HetSigma&, const HetSigma&) = default;
};

/// Blockwise signed sigmas.
struct SignedHet {
  int arity = 3;
  std::vector<SignedSigma> blocks;

  friend bool operator==(const SignedHet&, const SignedHet&) = default;
};

/// Throws DomainError unless 1 <= k <= n-1 and n >= 2.
BlockCyclicMatrix elementary(int n, int j, int k);
BlockCyclicMatrix elementary(const ElementarySigma& s);

/// V^(k) S_j^(k+1)^T: V^(k) is the block column with I_2 at slot k, S_j^(k+1)
/// the block column with sigma_j at slot k+1. The transpose acts on the block
/// layout only, the 2x2 blocks themselves are not transposed.
DenseMatrix elementary_outer(int n, int j, int k);

BlockCyclicMatrix full(int n, int j);
/// Throws DomainError unless js has n-1 entries in 0..3.
BlockCyclicMatrix het(int n, std::span<const int> js);
BlockCyclicMatrix het(const HetSigma& s);

BlockCyclicMatrix lower(const SignedElementary& s);
BlockCyclicMatrix lower(const SignedFull& s);
BlockCyclicMatrix lower(const SignedHet& s);

/// Product of elementary matrices of a common arity. The factor count must be
/// admissible. Nonzero only when each position is the cyclic successor of the
/// previous one; the result then sits at the first factor's position.
std::optional<SignedElementary> elementary_product(
    std::span<const ElementarySigma> factors);
/// The arity-3 case. Throws DomainError for other arities.
std::optional<SignedElementary> ternary_triple_elementary(
    const ElementarySigma& a, const ElementarySigma& b,
    const ElementarySigma& c);

/// Product of full matrices Sigma_{j_1} ... Sigma_{j_L}.
SignedFull full_product(int arity, std::span<const Sigma> factors);
SignedFull ternary_full_product(Sigma a, Sigma b, Sigma c);
/// (Sigma_j)^count with an admissible count.
SignedFull nary_power(int arity, Sigma j, std::size_t count);

SignedHet het_product(std::span<const HetSigma> factors);

/// abc + bca + cab - acb - bac - cba (ternary operands only).
BlockCyclicMatrix ternary_commutator(const BlockCyclicMatrix& a,
                                     const BlockCyclicMatrix& b,
                                     const BlockCyclicMatrix& c);
/// abc + bca + cab + acb + bac + cba (ternary operands only).
BlockCyclicMatrix ternary_anticommutator(const BlockCyclicMatrix& a,
                                         const BlockCyclicMatrix& b,
                                         const BlockCyclicMatrix& c);

struct ElementaryTerm {
  ElementarySigma sigma;
  Complex coeff;
};

/// Coefficients x0^(k) on Sigma_0^(k) and i x_j^(k) on Sigma_j^(k), in block
/// order, four terms per block.
std::vector<ElementaryTerm> expand(const PolyadicSU2Element& e);
BlockCyclicMatrix resum(int arity, std::span<const ElementaryTerm> terms);

/// Cyclic matrix of parameters with blocks x_j^(k) I_2.
struct ParamBlockMatrix {
  int arity = 3;
  Sigma j = Sigma::s0;
  std::vector<double> xs;

  BlockCyclicMatrix blocks() const;
  /// Same layout with x_j^(k) in all four entries of each block, the form an
  /// entrywise product needs to keep the off-diagonal entries of sigma_1 and
  /// sigma_2.
  DenseMatrix broadcast() const;
};

struct HadamardDecomposition {
  std::array<ParamBlockMatrix, 4> params;
  std::array<BlockCyclicMatrix, 4> sigmas;

  /// sum_j c_j X_j (.) Sigma_j with blocks multiplied as 2x2 matrices,
  /// c_0 = 1 and c_{1,2,3} = i.
  BlockCyclicMatrix reconstruct() const;
  /// The same sum as an entrywise product on dense matrices.
  DenseMatrix reconstruct_entrywise() const;
};

HadamardDecomposition hadamard_decompose(const PolyadicSU2Element& e);

/// Number of heterogeneous index tuples: enumerated 4^(n-1) next to the
/// closed formula (n-1)^4.
struct HetCount {
  int arity = 3;
  std::size_t enumerated = 0;
  std::size_t closed_formula = 0;
  bool agrees = false;
};

HetCount het_count(int n);
std::vector<HetSigma> enumerate_het(int n);

enum class RuleFamily { elementary, full };

/// Writes the arity-3 product rules as CSV with header
/// `lhs_indices,rhs_label,phase_exponent`. Elementary operands are written
/// `j@k`, the zero result as `Z`; phase_exponent counts quarter turns.
void rule_dump_csv(std::ostream& out, RuleFamily family);

std::string to_string(const ElementarySigma& s);

}  // namespace polysigma
