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

#include <gtest/gtest.h>

#include <random>

#include "polysigma/errors.hpp"
#include "polysigma/matrix.hpp"
#include "polysigma/su2.hpp"
#include "test_support.hpp"

namespace ps = polysigma;
namespace to = testing_oracle;

namespace {

constexpr ps::Complex kI{0.0, 1.0};

ps::DenseMatrix random_dense(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ps::DenseMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {u(rng), u(rng)};
  return m;
}

}  // namespace

TEST(MatrixCore, SigmaZeroIsIdentity) {
  EXPECT_EQ(ps::sigma(0), ps::Matrix2::identity());
}

TEST(MatrixCore, SigmaMatchesHandWrittenPauli) {
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(to::max_dev(to::to_mat(ps::sigma(j)), to::pauli(j)), 0.0) << j;
  }
}

TEST(MatrixCore, SigmaSquaresToIdentity) {
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(ps::sigma(j) * ps::sigma(j), ps::Matrix2::identity()) << j;
  }
}

TEST(MatrixCore, SigmaOneTimesSigmaTwoIsISigmaThree) {
  EXPECT_EQ(ps::sigma(1) * ps::sigma(2), kI * ps::sigma(3));
}

TEST(MatrixCore, SigmaRejectsBadIndex) {
  EXPECT_THROW(ps::sigma(4), ps::DomainError);
  EXPECT_THROW(ps::sigma(-1), ps::DomainError);
}

TEST(MatrixCore, AnticommutatorIsExact) {
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      const ps::Matrix2 sum = ps::sigma(j) * ps::sigma(k) + ps::sigma(k) * ps::sigma(j);
      const ps::Matrix2 want = j == k ? ps::Complex{2.0, 0.0} * ps::Matrix2::identity()
                                      : ps::Matrix2::zero();
      EXPECT_EQ(sum, want) << j << k;
    }
  }
}

TEST(MatrixCore, CommutatorIsExact) {
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      const ps::Matrix2 diff = ps::sigma(j) * ps::sigma(k) - ps::sigma(k) * ps::sigma(j);
      ps::Matrix2 want = ps::Matrix2::zero();
      for (int l = 1; l <= 3; ++l) {
        // Hand-coded epsilon so the check does not reuse library code.
        const int eps = (j == k || k == l || j == l) ? 0
                        : ((k - j + 3) % 3 == 1)      ? 1
                                                      : -1;
        want = want + ps::Complex{0.0, 2.0 * eps} * ps::sigma(l);
      }
      EXPECT_EQ(diff, want) << j << k;
    }
  }
}

TEST(MatrixCore, MatMulIdentityAndSquares) {
  std::mt19937_64 rng(1);
  const ps::DenseMatrix a = random_dense(4, rng);
  EXPECT_EQ(ps::mat_mul(ps::DenseMatrix::identity(4), a), a);
  EXPECT_EQ(ps::mat_mul(ps::dense(ps::sigma(1)), ps::dense(ps::sigma(1))),
            ps::DenseMatrix::identity(2));
}

TEST(MatrixCore, MatMulMatchesOracleAndAssociates) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_dense(6, rng);
    const auto b = random_dense(6, rng);
    const auto c = random_dense(6, rng);
    EXPECT_LE(to::max_dev(to::to_mat(ps::mat_mul(a, b)),
                          to::mul(to::to_mat(a), to::to_mat(b))),
              1e-12);
    EXPECT_LE(ps::max_deviation(ps::mat_mul(ps::mat_mul(a, b), c),
                                ps::mat_mul(a, ps::mat_mul(b, c))),
              1e-12);
  }
}

TEST(MatrixCore, MatMulRejectsDimensionMismatch) {
  EXPECT_THROW(ps::mat_mul(ps::DenseMatrix::identity(2), ps::DenseMatrix::identity(4)),
               ps::DomainError);
  EXPECT_THROW(ps::hadamard(ps::DenseMatrix::identity(2), ps::DenseMatrix::identity(4)),
               ps::DomainError);
}

TEST(MatrixCore, Hermitian) {
  EXPECT_EQ(ps::hermitian(ps::DenseMatrix::identity(2)), ps::DenseMatrix::identity(2));
  EXPECT_EQ(ps::hermitian(ps::dense(ps::sigma(2))), ps::dense(ps::sigma(2)));
  std::mt19937_64 rng(3);
  const auto a = random_dense(5, rng);
  EXPECT_EQ(ps::hermitian(ps::hermitian(a)), a);
  for (int trial = 0; trial < 50; ++trial) {
    const ps::DenseMatrix m = ps::dense(ps::su2_block(ps::random_su2(rng)));
    EXPECT_LE(ps::max_deviation(ps::mat_mul(ps::hermitian(m), m),
                                ps::DenseMatrix::identity(2)),
              1e-12);
    EXPECT_LE(ps::max_deviation(ps::mat_mul(m, ps::hermitian(m)),
                                ps::DenseMatrix::identity(2)),
              1e-12);
  }
}

TEST(MatrixCore, Hadamard) {
  std::mt19937_64 rng(4);
  const auto a = random_dense(4, rng);
  const auto b = random_dense(4, rng);
  EXPECT_EQ(ps::hadamard(a, ps::DenseMatrix::filled(4, 1.0)), a);
  EXPECT_EQ(ps::hadamard(a, b), ps::hadamard(b, a));
}

TEST(MatrixCore, HadamardOfScalarPatternWithSigmaZeroGivesScalarPart) {
  std::mt19937_64 rng(5);
  const auto e = ps::PolyadicSU2Element::random(3, rng);
  std::vector<ps::Matrix2> xs;
  std::vector<to::Mat> direct;
  for (const auto& p : e.blocks()) {
    xs.push_back(ps::Complex{p.x0, 0.0} * ps::Matrix2::identity());
    direct.push_back(to::scale(p.x0, to::pauli(0)));
  }
  const ps::DenseMatrix x0 = ps::BlockCyclicMatrix(3, xs).dense();
  const ps::DenseMatrix sigma0 =
      ps::BlockCyclicMatrix(3, {ps::sigma(0), ps::sigma(0)}).dense();
  EXPECT_EQ(to::max_dev(to::to_mat(ps::hadamard(x0, sigma0)), to::cyclic(direct)), 0.0);
}

TEST(MatrixCore, DeterminantAndTrace) {
  EXPECT_EQ(ps::det(ps::DenseMatrix::identity(4)), ps::Complex(1.0, 0.0));
  std::mt19937_64 rng(6);
  const auto m = ps::to_matrix(ps::PolyadicSU2Element::random(3, rng));
  EXPECT_EQ(ps::trace(m.dense()), ps::Complex(0.0, 0.0));
  EXPECT_TRUE(ps::approx_equal(ps::det(m.dense()), ps::Complex(1.0, 0.0), 1e-10));
}

TEST(MatrixCore, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
    const auto a = random_dense(n, rng);
    EXPECT_TRUE(ps::approx_equal(ps::det(a), to::cofactor_det(to::to_mat(a)), 1e-10)) << n;
  }
}

TEST(MatrixCore, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_dense(4, rng);
    const auto b = random_dense(4, rng);
    EXPECT_TRUE(ps::approx_equal(ps::det(ps::mat_mul(a, b)), ps::det(a) * ps::det(b), 1e-10));
  }
}

TEST(MatrixCore, BlockDiagonalDeterminantAndTraceSplit) {
  std::mt19937_64 rng(9);
  const auto a = random_dense(2, rng);
  const auto b = random_dense(2, rng);
  ps::DenseMatrix d(4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      d(r, c) = a(r, c);
      d(r + 2, c + 2) = b(r, c);
    }
  }
  EXPECT_TRUE(ps::approx_equal(ps::det(d), ps::det(a) * ps::det(b), 1e-12));
  EXPECT_TRUE(ps::approx_equal(ps::trace(d), ps::trace(a) + ps::trace(b), 1e-12));
}

TEST(MatrixCore, BlockCyclicLayoutMatchesOracle) {
  std::mt19937_64 rng(10);
  for (int n = 2; n <= 6; ++n) {
    const auto e = ps::PolyadicSU2Element::random(n, rng);
    EXPECT_EQ(to::max_dev(to::to_mat(ps::to_matrix(e).dense()), to::oracle_element(e)), 0.0);
  }
}

TEST(MatrixCore, DenseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n) {
    const auto m = ps::to_matrix(ps::PolyadicSU2Element::random(n, rng));
    EXPECT_EQ(ps::BlockCyclicMatrix::from_dense(n, m.dense()), m);
  }
}

TEST(MatrixCore, FromDenseRejectsOffPatternEntries) {
  ps::DenseMatrix d = ps::DenseMatrix::identity(4);
  EXPECT_THROW(ps::BlockCyclicMatrix::from_dense(3, d), ps::ValidationError);
  EXPECT_THROW(ps::BlockCyclicMatrix::from_dense(4, d), ps::ValidationError);
}

TEST(MatrixCore, BlockCyclicConstructorValidates) {
  EXPECT_THROW(ps::BlockCyclicMatrix(1, {}), ps::DomainError);
  EXPECT_THROW(ps::BlockCyclicMatrix(3, {ps::sigma(0)}), ps::ValidationError);
}

TEST(MatrixCore, ApproximateEqualityUsesComponentwiseMaximum) {
  EXPECT_TRUE(ps::approx_equal({1.0, 0.0}, {1.0 + 5e-13, -5e-13}));
  EXPECT_FALSE(ps::approx_equal({1.0, 0.0}, {1.0, 2e-12}));
  EXPECT_EQ(ps::deviation({1.0, 2.0}, {1.5, 1.0}), 1.0);
}
