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

#include "polysigma/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "polysigma/errors.hpp"

namespace polysigma {

double deviation(Complex a, Complex b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}

bool approx_equal(Complex a, Complex b, double tol) {
  return deviation(a, b) <= tol;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
           a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  return {{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
}

Matrix2 operator*(Complex s, const Matrix2& a) {
  return {{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
}

Matrix2 sigma(int j) {
  constexpr Complex i{0.0, 1.0};
  switch (j) {
    case 0:
      return Matrix2::identity();
    case 1:
      return {{0.0, 1.0, 1.0, 0.0}};
    case 2:
      return {{0.0, -i, i, 0.0}};
    case 3:
      return {{1.0, 0.0, 0.0, -1.0}};
    default:
      throw DomainError("sigma index must be in 0..3, got " + std::to_string(j));
  }
}

Complex det(const Matrix2& m) { return m.e[0] * m.e[3] - m.e[1] * m.e[2]; }

Complex trace(const Matrix2& m) { return m.e[0] + m.e[3]; }

Matrix2 adjoint(const Matrix2& m) {
  return {{std::conj(m.e[0]), std::conj(m.e[2]), std::conj(m.e[1]),
           std::conj(m.e[3])}};
}

Matrix2 inverse(const Matrix2& m) {
  const Complex d = det(m);
  if (std::abs(d) == 0.0) {
    throw DomainError("singular 2x2 block has no inverse");
  }
  const Complex s = 1.0 / d;
  return {{s * m.e[3], -s * m.e[1], -s * m.e[2], s * m.e[0]}};
}

double max_deviation(const Matrix2& a, const Matrix2& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, deviation(a.e[i], b.e[i]));
  }
  return worst;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::filled(std::size_t dim, Complex value) {
  DenseMatrix m(dim);
  std::fill(m.entries_.begin(), m.entries_.end(), value);
  return m;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Complex z) { return z == Complex{}; });
}

DenseMatrix dense(const Matrix2& m) {
  DenseMatrix d(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) d(r, c) = m(r, c);
  return d;
}

namespace {

void require_same_dim(const DenseMatrix& a, const DenseMatrix& b,
                      const char* what) {
  if (a.dim() != b.dim()) {
    throw DomainError(std::string(what) + ": dimension mismatch (" +
                      std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()) + ")");
  }
}

}  // namespace

void mat_mul_into(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& out) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  if (out.dim() != n) out = DenseMatrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.dim());
  mat_mul_into(a, b, out);
  return out;
}

DenseMatrix hermitian(const DenseMatrix& a) {
  DenseMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b, "hadamard");
  DenseMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) * b(r, c);
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b, "add");
  DenseMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b, "subtract");
  DenseMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

DenseMatrix operator*(Complex s, const DenseMatrix& a) {
  DenseMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = s * a(r, c);
  return out;
}

Complex det(const DenseMatrix& a) {
  const std::size_t n = a.dim();
  DenseMatrix lu = a;
  Complex result{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (std::abs(lu(pivot, col)) == 0.0) return Complex{};
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      result = -result;
    }
    result *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  return result;
}

Complex trace(const DenseMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double max_deviation(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b, "max_deviation");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    worst = std::max(worst, deviation(ea[i], eb[i]));
  }
  return worst;
}

bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  return a.dim() == b.dim() && max_deviation(a, b) <= tol;
}

BlockCyclicMatrix::BlockCyclicMatrix(int arity, std::vector<Matrix2> blocks)
    : arity_(arity), blocks_(std::move(blocks)) {
  if (arity < 2) {
    throw DomainError("arity must be at least 2, got " + std::to_string(arity));
  }
  if (blocks_.size() != static_cast<std::size_t>(arity - 1)) {
    throw ValidationError("arity " + std::to_string(arity) + " needs " +
                          std::to_string(arity - 1) + " blocks, got " +
                          std::to_string(blocks_.size()));
  }
}

BlockCyclicMatrix BlockCyclicMatrix::zero(int arity) {
  if (arity < 2) {
    throw DomainError("arity must be at least 2, got " + std::to_string(arity));
  }
  return {arity, std::vector<Matrix2>(static_cast<std::size_t>(arity - 1))};
}

DenseMatrix BlockCyclicMatrix::dense() const {
  const std::size_t m = blocks_.size();
  DenseMatrix out(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t row = 2 * k;
    const std::size_t col = 2 * ((k + 1) % m);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out(row + r, col + c) = blocks_[k](r, c);
  }
  return out;
}

BlockCyclicMatrix BlockCyclicMatrix::from_dense(int arity, const DenseMatrix& m,
                                                double tol) {
  if (arity < 2) {
    throw DomainError("arity must be at least 2, got " + std::to_string(arity));
  }
  const std::size_t count = static_cast<std::size_t>(arity - 1);
  if (m.dim() != 2 * count) {
    throw ValidationError("dense matrix has dimension " +
                          std::to_string(m.dim()) + ", expected " +
                          std::to_string(2 * count));
  }
  std::vector<Matrix2> blocks(count);
  for (std::size_t br = 0; br < count; ++br) {
    for (std::size_t bc = 0; bc < count; ++bc) {
      const bool on_pattern = bc == (br + 1) % count;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          const Complex z = m(2 * br + r, 2 * bc + c);
          if (on_pattern) {
            blocks[br](r, c) = z;
          } else if (std::abs(z.real()) > tol || std::abs(z.imag()) > tol) {
            throw ValidationError("dense matrix has an entry off the cyclic "
                                  "block pattern");
          }
        }
      }
    }
  }
  return {arity, std::move(blocks)};
}

BlockCyclicMatrix operator+(const BlockCyclicMatrix& a,
                            const BlockCyclicMatrix& b) {
  if (a.arity() != b.arity()) throw DomainError("add: arity mismatch");
  std::vector<Matrix2> blocks(a.block_count());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k] = a.block(k) + b.block(k);
  }
  return {a.arity(), std::move(blocks)};
}

BlockCyclicMatrix operator*(Complex s, const BlockCyclicMatrix& a) {
  std::vector<Matrix2> blocks(a.block_count());
  for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] = s * a.block(k);
  return {a.arity(), std::move(blocks)};
}

double max_deviation(const BlockCyclicMatrix& a, const BlockCyclicMatrix& b) {
  if (a.arity() != b.arity()) {
    throw DomainError("max_deviation: arity mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    worst = std::max(worst, max_deviation(a.block(k), b.block(k)));
  }
  return worst;
}

}  // namespace polysigma
