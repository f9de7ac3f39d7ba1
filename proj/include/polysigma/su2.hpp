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
#include <random>
#include <span>
#include <vector>

#include "polysigma/matrix.hpp"

namespace polysigma {

/// Tolerance on the unit-sphere condition when validating inputs. Looser than
/// the arithmetic tolerance so values that went through a text file still
/// pass.
inline constexpr double kNormTol = 1e-9;

/// Real parameters (x0, x1, x2, x3) of one SU(2) matrix, on the unit 3-sphere.
struct SU2Params {
  double x0 = 1.0;
  std::array<double, 3> x{};

  friend bool operator==(const SU2Params&, const SU2Params&) = default;
};

double norm_squared(const SU2Params& p);
/// Throws ValidationError unless |x0^2 + x^2 - 1| <= kNormTol and all
/// components are finite.
void validate(const SU2Params& p);

/// x0 sigma_0 + i (x1 sigma_1 + x2 sigma_2 + x3 sigma_3). This is the block
/// convention used by every polyadic construction in the library.
Matrix2 su2_block(const SU2Params& p);

/// The binary SU(2) matrix
///   ( x0 + i x1    x2 + i x3 )
///   (-x2 + i x3    x0 - i x1 ),
/// which is the layout the closed-form binary parameter product refers to.
/// It equals su2_block with x1 and x3 exchanged.
Matrix2 su2_matrix(const SU2Params& p);

/// Uniform on S^3: a normalized 4-dimensional standard Gaussian.
SU2Params random_su2(std::mt19937_64& rng);

/// An element of SU^[n](2): n-1 SU(2) parameter blocks.
class PolyadicSU2Element {
 public:
  PolyadicSU2Element(int arity, std::vector<SU2Params> blocks);

  /// The element with every block equal to the identity.
  static PolyadicSU2Element identity(int arity);
  static PolyadicSU2Element random(int arity, std::mt19937_64& rng);
  /// Every block equal to `p` (the restricted subgroup).
  static PolyadicSU2Element restricted(int arity, const SU2Params& p);

  int arity() const { return arity_; }
  std::span<const SU2Params> blocks() const { return blocks_; }
  const SU2Params& block(std::size_t k) const { return blocks_[k]; }

  friend bool operator==(const PolyadicSU2Element&,
                         const PolyadicSU2Element&) = default;

 private:
  int arity_;
  std::vector<SU2Params> blocks_;
};

BlockCyclicMatrix to_matrix(const PolyadicSU2Element& e);

/// True iff `count` = l(n-1)+1 for some l >= 1.
bool is_valid_factor_count(std::size_t count, int arity);

/// The n-ary product of l(n-1)+1 cyclic block matrices, computed block by
/// block: output block k is F1[k] F2[k+1] ... FL[k+L-1] (indices mod n-1).
/// Throws ArityError when the count is not admissible and DomainError when the
/// factors disagree on arity.
BlockCyclicMatrix nary_product(std::span<const BlockCyclicMatrix> factors);

/// The unique X with mu[M, ..., M, X] = M (X may sit at any position).
/// Block k of X is (M[k+1] ... M[k+n-2])^{-1}. Throws DomainError for a
/// singular block.
BlockCyclicMatrix querelement(const BlockCyclicMatrix& m);

/// mu[M, ..., M] with `q` substituted at `position` (0-based).
BlockCyclicMatrix product_with_substitute(const BlockCyclicMatrix& m,
                                          const BlockCyclicMatrix& q,
                                          std::size_t position);

enum class IdentitySide { left, right };

/// E_l(a) / E_r(b): scalar blocks coeff[k] * I. The coefficients must be
/// nonzero with product 1 (within kDefaultTol), else ValidationError.
BlockCyclicMatrix polyadic_identity(int arity, IdentitySide side,
                                    std::span<const double> coeffs);
/// E = E_l(1) = E_r(1).
BlockCyclicMatrix polyadic_identity(int arity);

/// mu with `m` at `position` and the identity candidate `e` in the other
/// n-1 slots. position 0 probes a right identity, n-1 a left identity, and
/// anything in between a middle identity.
BlockCyclicMatrix apply_identity(const BlockCyclicMatrix& e,
                                 const BlockCyclicMatrix& m,
                                 std::size_t position);

/// Sum of the ordinary traces of the n-1 blocks.
Complex polyadic_trace(const BlockCyclicMatrix& m);

/// Closed-form binary product of parameters: su2_matrix(result) =
/// su2_matrix(p) * su2_matrix(q).
SU2Params binary_param_mul(const SU2Params& p, const SU2Params& q);

using BlockPair = std::array<SU2Params, 2>;

/// Closed-form ternary product in SU^[3](2):
///   block 1 = p[1] q[2] r[1],  block 2 = p[2] q[1] r[2]
/// expanded through the sigma product rules.
BlockPair ternary_param_mul(const BlockPair& p, const BlockPair& q,
                            const BlockPair& r);

/// x0' x0'' + x' . x''  ( = Re tr(M'^dagger M'') / 2 ).
double invariant_i2(const SU2Params& p, const SU2Params& q);

struct DetLawReport {
  int arity = 0;
  Complex dense_det;
  Complex block_det_product;
  /// (-1)^(n-1) * prod det(blocks), the sign law as published.
  Complex published_law;
  bool matches_block_product = false;
  bool matches_published_law = false;
};

/// Determinant of the dense form, compared with the product of block
/// determinants and with the published sign law, both at kDeterminantTol.
DetLawReport det_law_check(const PolyadicSU2Element& e);

}  // namespace polysigma
