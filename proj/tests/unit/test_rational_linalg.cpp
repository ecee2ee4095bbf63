#include <gtest/gtest.h>

#include <random>

#include "symcoh/error.hpp"
#include "symcoh/linalg.hpp"
#include "symcoh/rational.hpp"

using namespace symcoh;

TEST(Rational, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse(" -3 ").str(), "-3");
  EXPECT_EQ(Rational::parse("0/5"), Rational(0));
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), DomainError); }

TEST(Rational, Factorial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(5), Rational(120));
}

TEST(Rational, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const Rational a(d(rng), std::max(1, std::abs(d(rng))));
    const Rational b(d(rng), std::max(1, std::abs(d(rng))));
    const Rational c(d(rng), std::max(1, std::abs(d(rng))));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
  }
}

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density_percent) {
  std::uniform_int_distribution<int> val(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> pct(0, 99);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (pct(rng) < density_percent) m(i, j) = Rational(val(rng), den(rng));
    }
  }
  return m;
}

}  // namespace

TEST(Linalg, KnownRanks) {
  EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(RationalMatrix(3, 5)), 0u);
  const auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank(RationalMatrix(0, 3)), 0u);
}

TEST(Linalg, BareissAgreesWithEchelonRankOnRandomMatrices) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int i = 0; i < 300; ++i) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 20 + (i % 5) * 20);
    EXPECT_EQ(rank(m), rank_rref(m));
  }
}

TEST(Linalg, LowRankProductsHaveExpectedRank) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    // (6x2)(2x6) has rank <= 2, generically exactly 2.
    const auto a = random_matrix(rng, 6, 2, 100);
    const auto b = random_matrix(rng, 2, 6, 100);
    const auto r = rank(a * b);
    EXPECT_LE(r, 2u);
    EXPECT_EQ(r, rank_rref(a * b));
  }
}

TEST(Linalg, NullspaceVectorsAreKernelAndComplementRank) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 40);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size() + rank(m), m.cols());
    for (const auto& v : ns) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        EXPECT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(Linalg, NullspaceOfEmptyRowSetIsStandardBasis) {
  const auto ns = nullspace(RationalMatrix(0, 3));
  ASSERT_EQ(ns.size(), 3u);
  EXPECT_EQ(ns[1], (RationalVector{0, 1, 0}));
}

TEST(Linalg, InverseTimesMatrixIsIdentity) {
  std::mt19937_64 rng(10);
  int invertible = 0;
  for (int i = 0; i < 100; ++i) {
    const auto m = random_matrix(rng, 4, 4, 80);
    if (rank(m) < 4) {
      EXPECT_THROW(inverse(m), DomainError);
      continue;
    }
    ++invertible;
    EXPECT_EQ(inverse(m) * m, RationalMatrix::identity(4));
  }
  EXPECT_GT(invertible, 20);
}
