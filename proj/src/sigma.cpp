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

#include "polysigma/sigma.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "polysigma/errors.hpp"

namespace polysigma {

namespace {

void require_arity(int n) {
  if (n < 2) throw DomainError("arity must be at least 2, got " + std::to_string(n));
}

std::size_t block_index(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw DomainError("block position " + std::to_string(k) +
                      " outside 1.." + std::to_string(n - 1));
  }
  return static_cast<std::size_t>(k - 1);
}

int normalize_turns(int t) { return ((t % 4) + 4) % 4; }

void require_count(std::size_t count, int arity) {
  if (!is_valid_factor_count(count, arity)) {
    throw ArityError("arity " + std::to_string(arity) +
                     " admits l(n-1)+1 factors, got " + std::to_string(count));
  }
}

void require_ternary(const BlockCyclicMatrix& a, const BlockCyclicMatrix& b,
                     const BlockCyclicMatrix& c) {
  if (a.arity() != 3 || b.arity() != 3 || c.arity() != 3) {
    throw DomainError("ternary (anti)commutator needs arity-3 operands");
  }
}

BlockCyclicMatrix triple(const BlockCyclicMatrix& a, const BlockCyclicMatrix& b,
                         const BlockCyclicMatrix& c) {
  const std::array<BlockCyclicMatrix, 3> f{a, b, c};
  return nary_product(f);
}

}  // namespace

Sigma to_sigma(int j) {
  if (j < 0 || j > 3) {
    throw DomainError("sigma index must be in 0..3, got " + std::to_string(j));
  }
  return static_cast<Sigma>(j);
}

int levi_civita(int a, int b, int c) {
  if (a < 1 || a > 3 || b < 1 || b > 3 || c < 1 || c > 3) return 0;
  if (a == b || b == c || a == c) return 0;
  // Even permutations of (1,2,3) are its cyclic shifts.
  return (b - a + 3) % 3 == 1 ? 1 : -1;
}

SignedSigma multiply(Sigma a, Sigma b) {
  const int x = index(a);
  const int y = index(b);
  if (x == 0) return {b, 0};
  if (y == 0) return {a, 0};
  if (x == y) return {Sigma::s0, 0};
  const int z = 6 - x - y;
  return {static_cast<Sigma>(z), levi_civita(x, y, z) == 1 ? 1 : 3};
}

SignedSigma multiply(SignedSigma a, Sigma b) {
  const SignedSigma p = multiply(a.sigma, b);
  return {p.sigma, normalize_turns(a.quarter_turns + p.quarter_turns)};
}

SignedSigma multiply_all(std::span<const Sigma> factors) {
  SignedSigma acc;
  for (Sigma s : factors) acc = multiply(acc, s);
  return acc;
}

Complex quarter_phase(int turns) {
  switch (normalize_turns(turns)) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

Matrix2 lower(const SignedSigma& s) {
  return quarter_phase(s.quarter_turns) * sigma(index(s.sigma));
}

BlockCyclicMatrix elementary(int n, int j, int k) {
  require_arity(n);
  const std::size_t slot = block_index(n, k);
  BlockCyclicMatrix zero = BlockCyclicMatrix::zero(n);
  std::vector<Matrix2> blocks(zero.blocks().begin(), zero.blocks().end());
  blocks[slot] = sigma(j);
  return {n, std::move(blocks)};
}

BlockCyclicMatrix elementary(const ElementarySigma& s) {
  return elementary(s.arity, index(s.j), s.k);
}

DenseMatrix elementary_outer(int n, int j, int k) {
  require_arity(n);
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::size_t row_slot = block_index(n, k);
  const std::size_t col_slot = (row_slot + 1) % m;
  const Matrix2 s = sigma(j);
  std::vector<Matrix2> v(m, Matrix2::zero());
  std::vector<Matrix2> w(m, Matrix2::zero());
  v[row_slot] = Matrix2::identity();
  w[col_slot] = s;
  DenseMatrix out(2 * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Matrix2 block = v[a] * w[b];
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(2 * a + r, 2 * b + c) = block(r, c);
    }
  }
  return out;
}

BlockCyclicMatrix full(int n, int j) {
  require_arity(n);
  return {n, std::vector<Matrix2>(static_cast<std::size_t>(n - 1), sigma(j))};
}

BlockCyclicMatrix het(int n, std::span<const int> js) {
  require_arity(n);
  if (js.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("heterogeneous matrix needs " + std::to_string(n - 1) +
                      " indices, got " + std::to_string(js.size()));
  }
  std::vector<Matrix2> blocks;
  for (int j : js) blocks.push_back(sigma(j));
  return {n, std::move(blocks)};
}

BlockCyclicMatrix het(const HetSigma& s) {
  std::vector<int> js;
  for (Sigma j : s.js) js.push_back(index(j));
  return het(s.arity, js);
}

BlockCyclicMatrix lower(const SignedElementary& s) {
  return quarter_phase(s.quarter_turns) * elementary(s.value);
}

BlockCyclicMatrix lower(const SignedFull& s) {
  return quarter_phase(s.quarter_turns) * full(s.arity, index(s.j));
}

BlockCyclicMatrix lower(const SignedHet& s) {
  require_arity(s.arity);
  if (s.blocks.size() != static_cast<std::size_t>(s.arity - 1)) {
    throw DomainError("signed heterogeneous matrix has the wrong block count");
  }
  std::vector<Matrix2> blocks;
  for (const auto& b : s.blocks) blocks.push_back(lower(b));
  return {s.arity, std::move(blocks)};
}

std::optional<SignedElementary> elementary_product(
    std::span<const ElementarySigma> factors) {
  if (factors.empty()) throw ArityError("product of no factors");
  const int n = factors.front().arity;
  require_arity(n);
  for (const auto& f : factors) {
    if (f.arity != n) throw DomainError("elementary product: mixed arities");
    block_index(n, f.k);
  }
  require_count(factors.size(), n);
  const int m = n - 1;
  SignedSigma acc;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0 && factors[i].k != factors[i - 1].k % m + 1) return std::nullopt;
    acc = multiply(acc, factors[i].j);
  }
  return SignedElementary{{n, acc.sigma, factors.front().k}, acc.quarter_turns};
}

std::optional<SignedElementary> ternary_triple_elementary(
    const ElementarySigma& a, const ElementarySigma& b,
    const ElementarySigma& c) {
  if (a.arity != 3 || b.arity != 3 || c.arity != 3) {
    throw DomainError("ternary triple product needs arity-3 operands");
  }
  const std::array<ElementarySigma, 3> f{a, b, c};
  return elementary_product(f);
}

SignedFull full_product(int arity, std::span<const Sigma> factors) {
  require_arity(arity);
  require_count(factors.size(), arity);
  const SignedSigma s = multiply_all(factors);
  return {arity, s.sigma, s.quarter_turns};
}

SignedFull ternary_full_product(Sigma a, Sigma b, Sigma c) {
  const std::array<Sigma, 3> f{a, b, c};
  return full_product(3, f);
}

SignedFull nary_power(int arity, Sigma j, std::size_t count) {
  require_arity(arity);
  require_count(count, arity);
  return {arity, count % 2 == 0 ? Sigma::s0 : j, 0};
}

SignedHet het_product(std::span<const HetSigma> factors) {
  if (factors.empty()) throw ArityError("product of no factors");
  const int n = factors.front().arity;
  require_arity(n);
  const std::size_t m = static_cast<std::size_t>(n - 1);
  for (const auto& f : factors) {
    if (f.arity != n || f.js.size() != m) {
      throw DomainError("heterogeneous product: inconsistent operands");
    }
  }
  require_count(factors.size(), n);
  SignedHet out{n, std::vector<SignedSigma>(m)};
  for (std::size_t k = 0; k < m; ++k) {
    SignedSigma acc;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      acc = multiply(acc, factors[i].js[(k + i) % m]);
    }
    out.blocks[k] = acc;
  }
  return out;
}

BlockCyclicMatrix ternary_commutator(const BlockCyclicMatrix& a,
                                     const BlockCyclicMatrix& b,
                                     const BlockCyclicMatrix& c) {
  require_ternary(a, b, c);
  const Complex minus{-1.0, 0.0};
  return triple(a, b, c) + triple(b, c, a) + triple(c, a, b) +
         minus * triple(a, c, b) + minus * triple(b, a, c) +
         minus * triple(c, b, a);
}

BlockCyclicMatrix ternary_anticommutator(const BlockCyclicMatrix& a,
                                         const BlockCyclicMatrix& b,
                                         const BlockCyclicMatrix& c) {
  require_ternary(a, b, c);
  return triple(a, b, c) + triple(b, c, a) + triple(c, a, b) + triple(a, c, b) +
         triple(b, a, c) + triple(c, b, a);
}

std::vector<ElementaryTerm> expand(const PolyadicSU2Element& e) {
  const int n = e.arity();
  std::vector<ElementaryTerm> terms;
  terms.reserve(4 * e.blocks().size());
  for (std::size_t slot = 0; slot < e.blocks().size(); ++slot) {
    const SU2Params& p = e.block(slot);
    const int k = static_cast<int>(slot) + 1;
    terms.push_back({{n, Sigma::s0, k}, Complex{p.x0, 0.0}});
    for (int j = 1; j <= 3; ++j) {
      terms.push_back({{n, to_sigma(j), k}, Complex{0.0, p.x[j - 1]}});
    }
  }
  return terms;
}

BlockCyclicMatrix resum(int arity, std::span<const ElementaryTerm> terms) {
  BlockCyclicMatrix acc = BlockCyclicMatrix::zero(arity);
  for (const auto& t : terms) {
    if (t.sigma.arity != arity) throw DomainError("resum: arity mismatch");
    acc = acc + t.coeff * elementary(t.sigma);
  }
  return acc;
}

BlockCyclicMatrix ParamBlockMatrix::blocks() const {
  require_arity(arity);
  if (xs.size() != static_cast<std::size_t>(arity - 1)) {
    throw DomainError("parameter matrix needs one value per block");
  }
  std::vector<Matrix2> b;
  for (double x : xs) b.push_back(Complex{x, 0.0} * Matrix2::identity());
  return {arity, std::move(b)};
}

DenseMatrix ParamBlockMatrix::broadcast() const {
  std::vector<Matrix2> b;
  for (double x : xs) b.push_back({{x, x, x, x}});
  return BlockCyclicMatrix(arity, std::move(b)).dense();
}

BlockCyclicMatrix HadamardDecomposition::reconstruct() const {
  const int n = params[0].arity;
  std::vector<Matrix2> out(static_cast<std::size_t>(n - 1), Matrix2::zero());
  for (std::size_t j = 0; j < 4; ++j) {
    const Complex c = j == 0 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
    const BlockCyclicMatrix x = params[j].blocks();
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = out[k] + c * (x.block(k) * sigmas[j].block(k));
    }
  }
  return {n, std::move(out)};
}

DenseMatrix HadamardDecomposition::reconstruct_entrywise() const {
  DenseMatrix acc = DenseMatrix::zero(sigmas[0].dim());
  for (std::size_t j = 0; j < 4; ++j) {
    const Complex c = j == 0 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
    acc = acc + c * hadamard(params[j].broadcast(), sigmas[j].dense());
  }
  return acc;
}

HadamardDecomposition hadamard_decompose(const PolyadicSU2Element& e) {
  const int n = e.arity();
  HadamardDecomposition d{
      {ParamBlockMatrix{n, Sigma::s0, {}}, ParamBlockMatrix{n, Sigma::s1, {}},
       ParamBlockMatrix{n, Sigma::s2, {}}, ParamBlockMatrix{n, Sigma::s3, {}}},
      {full(n, 0), full(n, 1), full(n, 2), full(n, 3)}};
  for (const auto& p : e.blocks()) {
    d.params[0].xs.push_back(p.x0);
    for (std::size_t j = 1; j < 4; ++j) d.params[j].xs.push_back(p.x[j - 1]);
  }
  return d;
}

HetCount het_count(int n) {
  require_arity(n);
  HetCount c;
  c.arity = n;
  c.enumerated = enumerate_het(n).size();
  const std::size_t m = static_cast<std::size_t>(n - 1);
  c.closed_formula = m * m * m * m;
  c.agrees = c.enumerated == c.closed_formula;
  return c;
}

std::vector<HetSigma> enumerate_het(int n) {
  require_arity(n);
  const std::size_t m = static_cast<std::size_t>(n - 1);
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= 4;
  std::vector<HetSigma> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    HetSigma h{n, std::vector<Sigma>(m)};
    std::size_t rest = code;
    // First block is the most significant digit.
    for (std::size_t k = m; k-- > 0;) {
      h.js[k] = static_cast<Sigma>(rest % 4);
      rest /= 4;
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::string to_string(const ElementarySigma& s) {
  return std::to_string(index(s.j)) + "@" + std::to_string(s.k);
}

void rule_dump_csv(std::ostream& out, RuleFamily family) {
  out << "lhs_indices,rhs_label,phase_exponent\n";
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        if (family == RuleFamily::full) {
          const SignedFull r =
              ternary_full_product(to_sigma(a), to_sigma(b), to_sigma(c));
          out << a << ' ' << b << ' ' << c << ',' << index(r.j) << ','
              << r.quarter_turns << '\n';
          continue;
        }
        for (int ka = 1; ka <= 2; ++ka) {
          for (int kb = 1; kb <= 2; ++kb) {
            for (int kc = 1; kc <= 2; ++kc) {
              const ElementarySigma x{3, to_sigma(a), ka};
              const ElementarySigma y{3, to_sigma(b), kb};
              const ElementarySigma z{3, to_sigma(c), kc};
              const auto r = ternary_triple_elementary(x, y, z);
              out << to_string(x) << ' ' << to_string(y) << ' ' << to_string(z)
                  << ',';
              if (r) {
                out << to_string(r->value) << ',' << r->quarter_turns << '\n';
              } else {
                out << "Z,0\n";
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace polysigma
