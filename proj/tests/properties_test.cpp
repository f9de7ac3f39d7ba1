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

// Randomized algebraic laws. Every case draws from its own generator seeded by
// (kSeed, case index), so a failure message names a reproducible case.

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "polysigma/matrix.hpp"
#include "polysigma/oracle.hpp"
#include "polysigma/phase.hpp"
#include "polysigma/su2.hpp"
#include "test_support.hpp"

namespace ps = polysigma;
namespace to = testing_oracle;

namespace {

using ps::Sigma;

constexpr std::uint64_t kSeed = 20261017;
constexpr int kCases = 300;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  int q() { return ps::kQ12[static_cast<std::size_t>(uniform(0, 11))]; }
  Sigma sigma() { return ps::to_sigma(uniform(0, 3)); }
  std::size_t count(int n, int max_l) {
    return static_cast<std::size_t>(uniform(1, max_l) * (n - 1) + 1);
  }

  ps::PhasedSigmaLabel pauli(int q) { return {q, sigma(), uniform(0, q - 1)}; }
  ps::PhasedFullLabel full(int n, int q) { return {q, n, sigma(), uniform(0, q - 1)}; }
  ps::PhasedElementaryLabel elementary(int n, int q) {
    if (uniform(0, 19) == 0) return ps::PhasedElementaryLabel::make_zero(q, n);
    return {q, n, sigma(), uniform(1, n - 1), uniform(0, q - 1), false};
  }
  ps::PhasedHetLabel het(int n, int q) {
    ps::PhasedHetLabel h{q, n, {}, {}};
    for (int k = 0; k < n - 1; ++k) {
      h.js.push_back(sigma());
      h.rs.push_back(uniform(0, q - 1));
    }
    return h;
  }
  ps::BlockCyclicMatrix su2(int n) { return ps::to_matrix(ps::PolyadicSU2Element::random(n, rng_)); }
  ps::SU2Params params() { return ps::random_su2(rng_); }

  template <typename F>
  auto many(std::size_t k, F&& f) {
    std::vector<decltype(f())> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(f());
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

void forall(const std::function<void(Gen&)>& property, int cases = kCases) {
  for (int i = 0; i < cases; ++i) {
    SCOPED_TRACE("seed " + std::to_string(kSeed) + ", case " + std::to_string(i));
    Gen g(kSeed + 7919ULL * static_cast<std::uint64_t>(i));
    property(g);
    if (::testing::Test::HasFailure()) return;
  }
}

template <typename L>
ps::DenseMatrix dense_product(const std::vector<L>& ops) {
  ps::DenseMatrix acc = ps::lower(ops[0]);
  for (std::size_t i = 1; i < ops.size(); ++i) acc = ps::mat_mul(acc, ps::lower(ops[i]));
  return acc;
}

template <typename L, typename Mul>
void expect_bracketing_invariant(const std::vector<L>& ops, std::size_t arity, Mul mul) {
  const L flat = mul(ops);
  if (ops.size() < 2 * arity - 1) return;
  for (std::size_t p = 0; p + arity <= ops.size(); ++p) {
    std::vector<L> outer(ops.begin(), ops.begin() + static_cast<long>(p));
    outer.push_back(mul(std::vector<L>(ops.begin() + static_cast<long>(p),
                                       ops.begin() + static_cast<long>(p + arity))));
    outer.insert(outer.end(), ops.begin() + static_cast<long>(p + arity), ops.end());
    EXPECT_EQ(mul(outer), flat) << "inner bracket at " << p;
  }
}

}  // namespace

TEST(Property, PhaseReductionStaysInRange) {
  forall([](Gen& g) {
    const ps::PhaseModulus m(g.q());
    const long long r = g.uniform(-100000, 100000);
    const int v = m.reduce(r);
    EXPECT_GE(v, 0);
    EXPECT_LT(v, m.value());
    EXPECT_EQ((r - v) % m.value(), 0);
    const int a = g.uniform(0, m.value() - 1);
    EXPECT_EQ(m.add(a, m.negate(a)), 0);
  });
}

TEST(Property, PauliLabelsFormAGroup) {
  forall([](Gen& g) {
    const int q = g.q();
    const auto a = g.pauli(q), b = g.pauli(q), c = g.pauli(q);
    EXPECT_EQ(ps::pauli_mul(ps::pauli_mul(a, b), c), ps::pauli_mul(a, ps::pauli_mul(b, c)));
    EXPECT_EQ(ps::pauli_mul(a, ps::pauli_inverse(a)), ps::pauli_identity(q));
    EXPECT_EQ(ps::pauli_mul(ps::pauli_identity(q), a), a);
    EXPECT_LE(ps::max_deviation(ps::lower(ps::pauli_mul(a, b)), dense_product<ps::PhasedSigmaLabel>({a, b})),
              ps::kDefaultTol);
  });
}

TEST(Property, FullProductsMatchDenseAndAreTotallyAssociative) {
  forall([](Gen& g) {
    const int n = g.uniform(3, 6);
    const int q = g.q();
    const auto ops = g.many(g.count(n, 3), [&] { return g.full(n, q); });
    const auto mul = [](const std::vector<ps::PhasedFullLabel>& v) { return ps::full_nary_mul(v); };
    EXPECT_LE(ps::max_deviation(ps::lower(mul(ops)), dense_product(ops)), ps::kDefaultTol);
    expect_bracketing_invariant(ops, static_cast<std::size_t>(n), mul);
  });
}

TEST(Property, ElementaryProductsMatchDenseAndAreTotallyAssociative) {
  forall([](Gen& g) {
    const int n = g.uniform(3, 6);
    const int q = g.q();
    const auto ops = g.many(g.count(n, 3), [&] { return g.elementary(n, q); });
    const auto mul = [](const std::vector<ps::PhasedElementaryLabel>& v) {
      return ps::elementary_nary_mul(v);
    };
    EXPECT_LE(ps::max_deviation(ps::lower(mul(ops)), dense_product(ops)), ps::kDefaultTol);
    expect_bracketing_invariant(ops, static_cast<std::size_t>(n), mul);
  });
}

TEST(Property, HetProductsMatchDenseAndAreTotallyAssociative) {
  forall([](Gen& g) {
    const int n = g.uniform(3, 6);
    const int q = g.q();
    const auto ops = g.many(g.count(n, 3), [&] { return g.het(n, q); });
    const auto mul = [](const std::vector<ps::PhasedHetLabel>& v) { return ps::het_nary_mul(v); };
    EXPECT_LE(ps::max_deviation(ps::lower(mul(ops)), dense_product(ops)), ps::kDefaultTol);
    expect_bracketing_invariant(ops, static_cast<std::size_t>(n), mul);
  });
}

TEST(Property, LabelQuerelementsSolveTheQuerelementEquation) {
  forall([](Gen& g) {
    const int n = g.uniform(3, 6);
    const int q = g.q();
    const auto f = g.full(n, q);
    const auto h = g.het(n, q);
    const auto fq = ps::full_querelement(f);
    const auto hq = ps::het_querelement_blockwise(h);
    for (int pos = 0; pos < n; ++pos) {
      std::vector<ps::PhasedFullLabel> fs(static_cast<std::size_t>(n), f);
      fs[static_cast<std::size_t>(pos)] = fq;
      EXPECT_EQ(ps::full_nary_mul(fs), f) << "position " << pos;
      std::vector<ps::PhasedHetLabel> hs(static_cast<std::size_t>(n), h);
      hs[static_cast<std::size_t>(pos)] = hq;
      EXPECT_EQ(ps::het_nary_mul(hs), h) << "position " << pos;
    }
    if (n == 3) {
      EXPECT_EQ(ps::het_querelement(h), hq);
    }
  });
}

TEST(Property, LabelIndexInvertsEnumeration) {
  forall([](Gen& g) {
    const int n = g.uniform(3, 5);
    const int q = g.q();
    const auto e = g.elementary(n, q);
    EXPECT_EQ(ps::enumerate_elementary(n, q)[ps::label_index(e)], e);
    const auto f = g.full(n, q);
    EXPECT_EQ(ps::enumerate_full(n, q)[ps::label_index(f)], f);
    const auto p = g.pauli(q);
    EXPECT_EQ(ps::enumerate_pauli(q)[ps::label_index(p)], p);
  }, 60);
}

TEST(Property, SU2ProductsAreTotallyAssociative) {
  forall([](Gen& g) {
    const int n = g.uniform(2, 6);
    const auto ops = g.many(g.count(n, 3), [&] { return g.su2(n); });
    const auto flat = ps::nary_product(ops);
    const auto a = static_cast<std::size_t>(n);
    for (std::size_t p = 0; ops.size() >= 2 * a - 1 && p + a <= ops.size(); ++p) {
      std::vector<ps::BlockCyclicMatrix> outer(ops.begin(), ops.begin() + static_cast<long>(p));
      outer.push_back(ps::nary_product(std::span<const ps::BlockCyclicMatrix>(ops).subspan(p, a)));
      outer.insert(outer.end(), ops.begin() + static_cast<long>(p + a), ops.end());
      EXPECT_LE(ps::max_deviation(ps::nary_product(outer), flat), 1e-12);
    }
    for (const auto& b : flat.blocks()) {
      EXPECT_LE(std::abs(ps::det(b) - ps::Complex(1.0, 0.0)), 1e-12);
    }
  });
}

TEST(Property, SU2QuerelementAtEveryPosition) {
  forall([](Gen& g) {
    const int n = g.uniform(2, 6);
    const auto m = g.su2(n);
    const auto x = ps::querelement(m);
    for (int pos = 0; pos < n; ++pos) {
      EXPECT_LE(ps::max_deviation(ps::product_with_substitute(m, x, static_cast<std::size_t>(pos)), m),
                1e-12);
    }
  });
}

TEST(Property, SU2ProductMatchesDenseOracle) {
  forall([](Gen& g) {
    const int n = g.uniform(3, 5);
    const auto ops = g.many(static_cast<std::size_t>(n), [&] { return g.su2(n); });
    to::Mat acc = to::to_mat(ops[0].dense());
    for (std::size_t i = 1; i < ops.size(); ++i) acc = to::mul(acc, to::to_mat(ops[i].dense()));
    EXPECT_LE(to::max_dev(to::to_mat(ps::nary_product(ops).dense()), acc), 1e-12);
  });
}

TEST(Property, BinaryParameterProductPreservesNormAndInvariant) {
  forall([](Gen& g) {
    const auto u = g.params(), p = g.params(), q = g.params();
    const auto up = ps::binary_param_mul(u, p);
    const auto uq = ps::binary_param_mul(u, q);
    EXPECT_NEAR(ps::norm_squared(up), 1.0, 1e-12);
    EXPECT_NEAR(ps::invariant_i2(up, uq), ps::invariant_i2(p, q), 1e-12);
    EXPECT_NEAR(ps::invariant_i2(p, p), 1.0, 1e-12);
  });
}

TEST(Property, PolyadicTraceIsAdditiveOverBlocks) {
  forall([](Gen& g) {
    const int n = g.uniform(2, 6);
    const auto a = g.su2(n), b = g.su2(n);
    const ps::Complex s = ps::polyadic_trace(a) + ps::polyadic_trace(b);
    EXPECT_LE(std::abs(ps::polyadic_trace(a + b) - s), 1e-12);
    if (n >= 3) {
      EXPECT_LE(std::abs(ps::trace(a.dense())), 1e-15);
    }
  });
}

TEST(Property, DenseRoundTripThroughBlocks) {
  forall([](Gen& g) {
    const int n = g.uniform(2, 6);
    const auto m = g.su2(n);
    EXPECT_EQ(ps::BlockCyclicMatrix::from_dense(n, m.dense()), m);
  });
}
