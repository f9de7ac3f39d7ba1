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

#include "polysigma/su2.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "polysigma/errors.hpp"

namespace polysigma {

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

// Scalar and vector part of (a0 + i a.s)(b0 + i b.s)(c0 + i c.s), written in
// the basis sigma_0, i sigma_1, i sigma_2, i sigma_3.
SU2Params triple(const SU2Params& a, const SU2Params& b, const SU2Params& c) {
  SU2Params out;
  out.x0 = a.x0 * b.x0 * c.x0 - a.x0 * dot(b.x, c.x) - b.x0 * dot(a.x, c.x) -
           c.x0 * dot(a.x, b.x) + dot(a.x, cross(b.x, c.x));
  out.x = (a.x0 * b.x0) * c.x + (a.x0 * c.x0) * b.x + (b.x0 * c.x0) * a.x -
          dot(a.x, b.x) * c.x + dot(a.x, c.x) * b.x - dot(b.x, c.x) * a.x -
          a.x0 * cross(b.x, c.x) - b.x0 * cross(a.x, c.x) -
          c.x0 * cross(a.x, b.x);
  return out;
}

}  // namespace

double norm_squared(const SU2Params& p) { return p.x0 * p.x0 + dot(p.x, p.x); }

void validate(const SU2Params& p) {
  if (!std::isfinite(p.x0) || !std::isfinite(p.x[0]) ||
      !std::isfinite(p.x[1]) || !std::isfinite(p.x[2])) {
    throw ValidationError("SU(2) parameters must be finite");
  }
  const double n2 = norm_squared(p);
  if (std::abs(n2 - 1.0) > kNormTol) {
    throw ValidationError("SU(2) parameters violate x0^2 + x^2 = 1 (got " +
                          std::to_string(n2) + ")");
  }
}

Matrix2 su2_block(const SU2Params& p) {
  return {{Complex{p.x0, p.x[2]}, Complex{p.x[1], p.x[0]},
           Complex{-p.x[1], p.x[0]}, Complex{p.x0, -p.x[2]}}};
}

Matrix2 su2_matrix(const SU2Params& p) {
  return {{Complex{p.x0, p.x[0]}, Complex{p.x[1], p.x[2]},
           Complex{-p.x[1], p.x[2]}, Complex{p.x0, -p.x[0]}}};
}

SU2Params random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double v[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& c : v) {
      c = gauss(rng);
      n2 += c * c;
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  return {v[0] * inv, {v[1] * inv, v[2] * inv, v[3] * inv}};
}

PolyadicSU2Element::PolyadicSU2Element(int arity, std::vector<SU2Params> blocks)
    : arity_(arity), blocks_(std::move(blocks)) {
  if (arity < 2) {
    throw DomainError("arity must be at least 2, got " + std::to_string(arity));
  }
  if (blocks_.size() != static_cast<std::size_t>(arity - 1)) {
    throw ValidationError("arity " + std::to_string(arity) + " needs " +
                          std::to_string(arity - 1) + " blocks, got " +
                          std::to_string(blocks_.size()));
  }
  for (const auto& b : blocks_) validate(b);
}

PolyadicSU2Element PolyadicSU2Element::identity(int arity) {
  return restricted(arity, SU2Params{});
}

PolyadicSU2Element PolyadicSU2Element::random(int arity, std::mt19937_64& rng) {
  if (arity < 2) {
    throw DomainError("arity must be at least 2, got " + std::to_string(arity));
  }
  std::vector<SU2Params> blocks;
  for (int k = 0; k < arity - 1; ++k) blocks.push_back(random_su2(rng));
  return {arity, std::move(blocks)};
}

PolyadicSU2Element PolyadicSU2Element::restricted(int arity,
                                                  const SU2Params& p) {
  if (arity < 2) {
    throw DomainError("arity must be at least 2, got " + std::to_string(arity));
  }
  return {arity, std::vector<SU2Params>(static_cast<std::size_t>(arity - 1), p)};
}

BlockCyclicMatrix to_matrix(const PolyadicSU2Element& e) {
  std::vector<Matrix2> blocks;
  blocks.reserve(e.blocks().size());
  for (const auto& p : e.blocks()) blocks.push_back(su2_block(p));
  return {e.arity(), std::move(blocks)};
}

bool is_valid_factor_count(std::size_t count, int arity) {
  if (arity < 2 || count < 2) return false;
  return (count - 1) % static_cast<std::size_t>(arity - 1) == 0;
}

BlockCyclicMatrix nary_product(std::span<const BlockCyclicMatrix> factors) {
  if (factors.empty()) throw ArityError("n-ary product of no factors");
  const int n = factors.front().arity();
  for (const auto& f : factors) {
    if (f.arity() != n) throw DomainError("n-ary product: mixed arities");
  }
  if (!is_valid_factor_count(factors.size(), n)) {
    throw ArityError("arity " + std::to_string(n) + " admits l(n-1)+1 factors, got " +
                     std::to_string(factors.size()));
  }
  const std::size_t m = static_cast<std::size_t>(n - 1);
  std::vector<Matrix2> blocks(m);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix2 acc = factors[0].block(k);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      acc = acc * factors[i].block((k + i) % m);
    }
    blocks[k] = acc;
  }
  return {n, std::move(blocks)};
}

BlockCyclicMatrix querelement(const BlockCyclicMatrix& m) {
  const std::size_t count = m.block_count();
  const std::size_t n = count + 1;
  std::vector<Matrix2> blocks(count);
  for (std::size_t k = 0; k < count; ++k) {
    Matrix2 inv = Matrix2::identity();
    // (M[k+1] ... M[k+n-2])^{-1} = M[k+n-2]^{-1} ... M[k+1]^{-1}
    for (std::size_t s = 1; s + 1 < n; ++s) {
      inv = inv * inverse(m.block((k + n - 1 - s) % count));
    }
    blocks[k] = inv;
  }
  return {m.arity(), std::move(blocks)};
}

BlockCyclicMatrix product_with_substitute(const BlockCyclicMatrix& m,
                                          const BlockCyclicMatrix& q,
                                          std::size_t position) {
  const std::size_t n = static_cast<std::size_t>(m.arity());
  if (position >= n) throw DomainError("substitute position out of range");
  std::vector<BlockCyclicMatrix> factors(n, m);
  factors[position] = q;
  return nary_product(factors);
}

BlockCyclicMatrix polyadic_identity(int arity, IdentitySide /*side*/,
                                    std::span<const double> coeffs) {
  if (arity < 2) {
    throw DomainError("arity must be at least 2, got " + std::to_string(arity));
  }
  if (coeffs.size() != static_cast<std::size_t>(arity - 1)) {
    throw ValidationError("identity needs " + std::to_string(arity - 1) +
                          " coefficients");
  }
  double product = 1.0;
  std::vector<Matrix2> blocks;
  for (double a : coeffs) {
    if (a == 0.0 || !std::isfinite(a)) {
      throw ValidationError("identity coefficients must be finite and nonzero");
    }
    product *= a;
    blocks.push_back(Complex{a, 0.0} * Matrix2::identity());
  }
  if (std::abs(product - 1.0) > kDefaultTol) {
    throw ValidationError("identity coefficients must multiply to 1 (got " +
                          std::to_string(product) + ")");
  }
  return {arity, std::move(blocks)};
}

BlockCyclicMatrix polyadic_identity(int arity) {
  const std::vector<double> ones(static_cast<std::size_t>(arity > 1 ? arity - 1 : 0),
                                 1.0);
  return polyadic_identity(arity, IdentitySide::left, ones);
}

BlockCyclicMatrix apply_identity(const BlockCyclicMatrix& e,
                                 const BlockCyclicMatrix& m,
                                 std::size_t position) {
  return product_with_substitute(e, m, position);
}

Complex polyadic_trace(const BlockCyclicMatrix& m) {
  Complex t{};
  for (const auto& b : m.blocks()) t += trace(b);
  return t;
}

SU2Params binary_param_mul(const SU2Params& p, const SU2Params& q) {
  validate(p);
  validate(q);
  const auto& a = p.x;
  const auto& b = q.x;
  SU2Params r;
  r.x0 = p.x0 * q.x0 - a[0] * b[0] - a[1] * b[1] - a[2] * b[2];
  r.x[0] = a[0] * q.x0 + p.x0 * b[0] + a[1] * b[2] - a[2] * b[1];
  r.x[1] = a[1] * q.x0 + p.x0 * b[1] + a[2] * b[0] - a[0] * b[2];
  r.x[2] = a[2] * q.x0 + p.x0 * b[2] + a[0] * b[1] - a[1] * b[0];
  return r;
}

BlockPair ternary_param_mul(const BlockPair& p, const BlockPair& q,
                            const BlockPair& r) {
  for (const BlockPair* pair : {&p, &q, &r}) {
    validate((*pair)[0]);
    validate((*pair)[1]);
  }
  return {triple(p[0], q[1], r[0]), triple(p[1], q[0], r[1])};
}

double invariant_i2(const SU2Params& p, const SU2Params& q) {
  return p.x0 * q.x0 + dot(p.x, q.x);
}

DetLawReport det_law_check(const PolyadicSU2Element& e) {
  DetLawReport report;
  report.arity = e.arity();
  const BlockCyclicMatrix m = to_matrix(e);
  report.dense_det = det(m.dense());
  Complex product{1.0, 0.0};
  for (const auto& b : m.blocks()) product *= det(b);
  report.block_det_product = product;
  const double sign = (e.arity() - 1) % 2 == 0 ? 1.0 : -1.0;
  report.published_law = sign * product;
  report.matches_block_product =
      approx_equal(report.dense_det, product, kDeterminantTol);
  report.matches_published_law =
      approx_equal(report.dense_det, report.published_law, kDeterminantTol);
  return report;
}

}  // namespace polysigma
