#include <gtest/gtest.h>

#include "kcs/matrix.hpp"
#include "kcs/sampling.hpp"
#include "test_support.hpp"

using namespace kcs;
using kcs::test::vec;

namespace {

Matrix random_matrix(Xoshiro256& gen, std::size_t rows, std::size_t cols, bool complex = false) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = GaussianRational(random_rational(gen, 3), complex ? random_rational(gen, 3) : Rational());
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-0/5").str(), "0");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, GaussianArithmetic) {
  const GaussianRational z(Rational(1, 2), Rational(3));
  EXPECT_EQ(z.str(), "1/2+3i");
  EXPECT_EQ((z * z.conj()).str(), "37/4");
  EXPECT_EQ(z.norm(), Rational(37, 4));
  EXPECT_EQ(z / z, GaussianRational(1));
  EXPECT_EQ(GaussianRational(Rational(0), Rational(-1)).str(), "-i");
}

TEST(Nullspace, FullRankIsEmpty) { EXPECT_TRUE(nullspace(Matrix::identity(2)).empty()); }

TEST(Nullspace, SumRow) {
  const auto ns = nullspace(Matrix{{1, 1}});
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], vec({1, -1}));
}

TEST(Nullspace, BlowupPairingRow) {
  const auto ns = nullspace(Matrix{{8, 1}});
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], vec({1, -8}));
}

TEST(Solve, Identity) {
  const Vector b = vec({4, -7, 2});
  EXPECT_EQ(solve(Matrix::identity(3), b), b);
}

TEST(Solve, PivotFirstParametrization) { EXPECT_EQ(solve(Matrix{{1, 1}}, vec({2})), vec({2, 0})); }

TEST(Solve, Inconsistent) { EXPECT_FALSE(solve(Matrix{{1, 1}, {2, 2}}, vec({1, 3})).has_value()); }

TEST(Inertia, Diagonal) { EXPECT_EQ(inertia(Matrix{{2, 0}, {0, -3}}), (Inertia{1, 1, 0})); }

TEST(Inertia, Zero) { EXPECT_EQ(inertia(Matrix(3, 3)), (Inertia{0, 0, 3})); }

TEST(Inertia, Hyperbolic) { EXPECT_EQ(inertia(Matrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0})); }

TEST(Inertia, RejectsNonSymmetric) {
  EXPECT_THROW(inertia(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(inertia(Matrix{{1, 2}}), std::invalid_argument);
  const GaussianRational i(Rational(0), Rational(1));
  const Matrix herm{{1, i}, {-i, 1}};
  EXPECT_THROW(inertia(herm, false), std::invalid_argument);
  EXPECT_EQ(inertia(herm, true), (Inertia{1, 0, 1}));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(4)), 4u);
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(Matrix{{3, 1}, {1, 1}}), 2u);
}

TEST(LinalgProperties, RankNullity) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    Xoshiro256 gen = Xoshiro256::stream(11, k);
    const std::size_t rows = 1 + gen.below(4);
    const std::size_t cols = 1 + gen.below(4);
    Matrix m = random_matrix(gen, rows, cols, k % 3 == 0);
    if (k % 2 == 0 && rows > 1) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * GaussianRational(2);
    }
    const auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), cols);
    for (const auto& v : ns) {
      for (const auto& z : m.apply(v)) EXPECT_TRUE(z.is_zero());
    }
    if (!ns.empty()) EXPECT_EQ(rank(Matrix::from_rows(ns, cols)), ns.size());
  }
}

TEST(LinalgProperties, SolveApplyRoundTrip) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    Xoshiro256 gen = Xoshiro256::stream(12, k);
    const std::size_t rows = 1 + gen.below(4);
    const std::size_t cols = 1 + gen.below(4);
    const Matrix m = random_matrix(gen, rows, cols, k % 2 == 1);
    Vector x(cols);
    for (auto& z : x) z = GaussianRational(random_rational(gen, 5), random_rational(gen, 5));
    const Vector b = m.apply(x);
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
}

TEST(LinalgProperties, InertiaCongruenceInvariant) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    Xoshiro256 gen = Xoshiro256::stream(13, k);
    const std::size_t n = 1 + gen.below(4);
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = random_rational(gen, 2);
    Matrix a = random_matrix(gen, n, n);
    if (rank(a) < n) a = Matrix::identity(n);
    const Inertia base = inertia(s);
    EXPECT_EQ(base.dimension(), n);
    EXPECT_EQ(inertia(a.transpose() * s * a), base);
  }
}

TEST(LinalgProperties, HermitianCongruenceInvariant) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    Xoshiro256 gen = Xoshiro256::stream(14, k);
    const std::size_t n = 1 + gen.below(3);
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      h(i, i) = random_rational(gen, 2);
      for (std::size_t j = i + 1; j < n; ++j) {
        h(i, j) = GaussianRational(random_rational(gen, 2), random_rational(gen, 2));
        h(j, i) = h(i, j).conj();
      }
    }
    Matrix a = random_matrix(gen, n, n, true);
    if (rank(a) < n) a = Matrix::identity(n);
    EXPECT_EQ(inertia(a.adjoint() * h * a, true), inertia(h, true));
  }
}

TEST(LinalgProperties, EchelonIsCanonical) {
  const Matrix m{{2, 4, 6}, {1, 2, 4}};
  const EchelonForm e = row_echelon(m);
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(e.reduced, (Matrix{{1, 2, 0}, {0, 0, 1}}));
  const std::vector<Vector> expected{Vector{1, Rational(-1, 2), 0}};
  EXPECT_EQ(nullspace(m), expected);
}
