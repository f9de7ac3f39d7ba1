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

// Independent oracle for the tests: plain nested vectors, hand-written Pauli
// matrices, cofactor determinants. Nothing here calls into the library.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace testing_oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat pauli(int j) {
  const C i{0.0, 1.0};
  switch (j) {
    case 1:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case 2:
      return {{0.0, -i}, {i, 0.0}};
    case 3:
      return {{1.0, 0.0}, {0.0, -1.0}};
    default:
      return {{1.0, 0.0}, {0.0, 1.0}};
  }
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out = zeros(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

inline Mat add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out[r][c] += b[r][c];
  return out;
}

inline Mat scale(C s, const Mat& a) {
  Mat out = a;
  for (auto& row : out)
    for (auto& z : row) z *= s;
  return out;
}

/// x0 I + i (x1 s1 + x2 s2 + x3 s3)
inline Mat su2(double x0, double x1, double x2, double x3) {
  const C i{0.0, 1.0};
  Mat m = scale(x0, pauli(0));
  m = add(m, scale(i * x1, pauli(1)));
  m = add(m, scale(i * x2, pauli(2)));
  return add(m, scale(i * x3, pauli(3)));
}

/// [[x0 + i x1, x2 + i x3], [-x2 + i x3, x0 - i x1]], the layout the binary
/// parameter product is written in.
inline Mat su2_m(double x0, double x1, double x2, double x3) {
  return {{C{x0, x1}, C{x2, x3}}, {C{-x2, x3}, C{x0, -x1}}};
}

/// Reads (x0, x1, x2, x3) back from a block built by su2().
inline std::array<double, 4> params_of(const Mat& b) {
  return {b[0][0].real(), b[0][1].imag(), b[0][1].real(), b[0][0].imag()};
}

/// Block (row, col) of a block matrix.
inline Mat block(const Mat& a, std::size_t row, std::size_t col) {
  return {{a[2 * row][2 * col], a[2 * row][2 * col + 1]},
          {a[2 * row + 1][2 * col], a[2 * row + 1][2 * col + 1]}};
}

/// Places 2x2 blocks b[k] at block row k, block column (k+1) mod m.
inline Mat cyclic(const std::vector<Mat>& b) {
  const std::size_t m = b.size();
  Mat out = zeros(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t col = (k + 1) % m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out[2 * k + r][2 * col + c] = b[k][r][c];
  }
  return out;
}

inline C cofactor_det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  C total{};
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<C> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const double sign = c % 2 == 0 ? 1.0 : -1.0;
    total += sign * a[0][c] * cofactor_det(minor);
  }
  return total;
}

inline double max_dev(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      worst = std::max({worst, std::abs(a[r][c].real() - b[r][c].real()),
                        std::abs(a[r][c].imag() - b[r][c].imag())});
  return worst;
}

/// exp(2 pi i r / q) in floating point, no exact special cases.
inline C phase(int r, int q) {
  return std::polar(1.0, 2.0 * 3.14159265358979323846 * r / q);
}

inline std::array<double, 4> unit4(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::array<double, 4> v{g(rng), g(rng), g(rng), g(rng)};
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
  for (double& x : v) x /= n;
  return v;
}

}  // namespace testing_oracle
