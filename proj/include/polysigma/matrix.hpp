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
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace polysigma {

using Complex = std::complex<double>;

/// Default entrywise tolerance for oracle comparisons.
inline constexpr double kDefaultTol = 1e-12;
/// Relaxed tolerance for determinants of the larger dense matrices.
inline constexpr double kDeterminantTol = 1e-10;

/// max(|Re a - Re b|, |Im a - Im b|)
double deviation(Complex a, Complex b);
bool approx_equal(Complex a, Complex b, double tol = kDefaultTol);

/// A 2x2 complex matrix stored row-major.
struct Matrix2 {
  std::array<Complex, 4> e{};

  static Matrix2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  static Matrix2 zero() { return {}; }

  Complex operator()(int row, int col) const { return e[2 * row + col]; }
  Complex& operator()(int row, int col) { return e[2 * row + col]; }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator-(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(Complex s, const Matrix2& a);

/// The Pauli matrices sigma_0 (= I) .. sigma_3. Throws DomainError for j
/// outside 0..3.
Matrix2 sigma(int j);

Complex det(const Matrix2& m);
Complex trace(const Matrix2& m);
Matrix2 adjoint(const Matrix2& m);
/// Throws DomainError when the determinant vanishes.
Matrix2 inverse(const Matrix2& m);
double max_deviation(const Matrix2& a, const Matrix2& b);

/// Square dense complex matrix, row-major. Used as the oracle representation.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix zero(std::size_t dim) { return DenseMatrix(dim); }
  static DenseMatrix filled(std::size_t dim, Complex value);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

DenseMatrix dense(const Matrix2& m);

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
/// Allocation-free product for hot loops; `out` is resized if needed and must
/// not alias either operand.
void mat_mul_into(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& out);
DenseMatrix hermitian(const DenseMatrix& a);
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex s, const DenseMatrix& a);

/// LU decomposition with partial pivoting.
Complex det(const DenseMatrix& a);
Complex trace(const DenseMatrix& a);

/// Largest entrywise deviation; throws DomainError on dimension mismatch.
double max_deviation(const DenseMatrix& a, const DenseMatrix& b);
bool approx_equal(const DenseMatrix& a, const DenseMatrix& b,
                  double tol = kDefaultTol);

/// A 2(n-1) x 2(n-1) matrix whose only nonzero 2x2 blocks sit at block
/// positions (k, k+1) for k = 1..n-2 and (n-1, 1). Blocks are held as a list;
/// `dense()` lowers to the full matrix.
///
/// Block indices in this class are 0-based: blocks()[k] lives at block row k,
/// block column (k+1) mod (n-1).
class BlockCyclicMatrix {
 public:
  BlockCyclicMatrix(int arity, std::vector<Matrix2> blocks);

  /// All blocks zero.
  static BlockCyclicMatrix zero(int arity);
  /// Reads the blocks back from a dense matrix. Throws ValidationError when
  /// an entry off the cyclic pattern exceeds `tol`.
  static BlockCyclicMatrix from_dense(int arity, const DenseMatrix& m,
                                      double tol = 0.0);

  int arity() const { return arity_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::span<const Matrix2> blocks() const { return blocks_; }
  const Matrix2& block(std::size_t k) const { return blocks_[k]; }

  std::size_t dim() const { return 2 * blocks_.size(); }
  DenseMatrix dense() const;

  friend bool operator==(const BlockCyclicMatrix&,
                         const BlockCyclicMatrix&) = default;

 private:
  int arity_;
  std::vector<Matrix2> blocks_;
};

BlockCyclicMatrix operator+(const BlockCyclicMatrix& a,
                            const BlockCyclicMatrix& b);
BlockCyclicMatrix operator*(Complex s, const BlockCyclicMatrix& a);

double max_deviation(const BlockCyclicMatrix& a, const BlockCyclicMatrix& b);

}  // namespace polysigma
