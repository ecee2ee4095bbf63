#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "symcoh/darboux.hpp"

using namespace symcoh;

namespace symcoh {
void PrintTo(Identity id, std::ostream* os) { *os << identity_name(id); }
}  // namespace symcoh

namespace {

Polynomial c(long v) { return Polynomial(Rational(v)); }

// sum_i d_qi f d_pi g - d_pi f d_qi g, written out without the symplectic context.
Polynomial oracle_bracket(int n, const Polynomial& f, const Polynomial& g) {
  Polynomial out;
  for (int i = 0; i < n; ++i) {
    out = out + partial(f, i) * partial(g, n + i) - partial(f, n + i) * partial(g, i);
  }
  return out;
}

TEST(Polynomial, Basics) {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const Polynomial f = x * x * y + c(3);
  EXPECT_EQ(f.total_degree(), 3);
  EXPECT_EQ(partial(f, 0), x * y * c(2));
  EXPECT_EQ(partial(f, 2), Polynomial());
  EXPECT_EQ(f.constant_term(), Rational(3));
  const std::vector<Rational> pt{Rational(2), Rational(-1)};
  EXPECT_EQ(f.evaluate(pt), Rational(-1));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.str({"q", "p"}), "3 + q^2*p");
}

TEST(Darboux, BracketExamples) {
  const DarbouxChart chart(1);
  const Polynomial q = chart.q(0);
  const Polynomial p = chart.p(0);
  EXPECT_EQ(poisson(chart, q, p), c(1));
  EXPECT_EQ(poisson(chart, q * q, p), q * c(2));
  EXPECT_EQ(ham_vf(chart, q), (PolyVectorField{c(0), c(1)}));
  EXPECT_EQ(ham_vf(chart, p), (PolyVectorField{c(-1), c(0)}));
}

TEST(Darboux, FormExamples) {
  const DarbouxChart chart(1);
  const Polynomial q = chart.q(0);
  const Polynomial p = chart.p(0);
  // d(qp dq) = -q dq ^ dp
  EXPECT_EQ(d_poly(chart.dq(0) * (q * p)), wedge(chart.dq(0), chart.dp(0)) * (-q));
  EXPECT_EQ(ext_bracket(chart, chart.dp(0) * (q * q), chart.dq(0) * (p * p)), chart.dp(0) * (q * c(-4)));
  EXPECT_THROW(ext_bracket(chart, chart.function(q), chart.dq(0)), DegreeError);
  EXPECT_EQ(evaluate_one_form(chart.dq(0) * p, PolyVectorField{q, c(1)}), q * p);
}

TEST(Darboux, BracketMatchesCoordinateFormula) {
  for (int n = 1; n <= 3; ++n) {
    const DarbouxChart chart(n);
    Rng rng(40 + n);
    for (int i = 0; i < 200; ++i) {
      const Polynomial f = random_polynomial(rng, chart.dimension());
      const Polynomial g = random_polynomial(rng, chart.dimension());
      ASSERT_EQ(poisson(chart, f, g), oracle_bracket(n, f, g));
    }
  }
}

TEST(Darboux, HamiltonianFieldsIntertwineBrackets) {
  const DarbouxChart chart(2);
  Rng rng(44);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng, 4);
    const Polynomial g = random_polynomial(rng, 4);
    ASSERT_EQ(lie_bracket(ham_vf(chart, f), ham_vf(chart, g)), ham_vf(chart, poisson(chart, f, g)));
    // df = -i_{X_f} omega
    ASSERT_EQ(d_poly(chart.function(f)), -interior(ham_vf(chart, f), chart.omega_power(1)));
  }
}

TEST(Darboux, ChartBounds) {
  EXPECT_THROW(DarbouxChart(0), ContextError);
  EXPECT_THROW(DarbouxChart(5), ContextError);
  EXPECT_EQ(DarbouxChart(2).names(), (std::vector<std::string>{"q1", "q2", "p1", "p2"}));
}

std::set<std::pair<int, int>> jacobi_survivors(int n) {
  const DarbouxChart chart(n);
  std::set<std::pair<int, int>> out;
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      Rng rng(50 + n);
      bool ok = true;
      for (int i = 0; i < 40 && ok; ++i) {
        const PolyForm a1 = random_form(rng, chart, 1);
        const PolyForm a2 = random_form(rng, chart, 1);
        const PolyForm a3 = random_form(rng, chart, 1);
        ok = jacobi_defect(chart, a1, a2, a3, s1, s2).is_zero();
      }
      if (ok) out.insert({s1, s2});
    }
  }
  return out;
}

TEST(Darboux, JacobiSignBootstrap) {
  // 2n = 2 admits two sign pairs; 2n = 4 singles one out.
  const auto two = jacobi_survivors(1);
  const auto four = jacobi_survivors(2);
  std::set<std::pair<int, int>> both;
  for (const auto& s : two) {
    if (four.count(s)) both.insert(s);
  }
  ASSERT_EQ(both, (std::set<std::pair<int, int>>{{kJacobiDeltaSign, kJacobiExactSign}}));
}

TEST(Darboux, ClosedAlphaSignBootstrap) {
  for (int n = 1; n <= 2; ++n) {
    const DarbouxChart chart(n);
    std::vector<int> survivors;
    for (int sign : {-1, 1}) {
      Rng rng(60 + n);
      bool ok = true;
      for (int i = 0; i < 60 && ok; ++i) {
        const PolyForm alpha = random_closed_one_form(rng, chart);
        const PolyForm big_f = random_form(rng, chart, 2);
        ok = closed_alpha_defect(chart, alpha, big_f, sign).is_zero();
      }
      if (ok) survivors.push_back(sign);
    }
    ASSERT_EQ(survivors, std::vector<int>{kClosedAlphaSign}) << "2n = " << 2 * n;
  }
}

TEST(Darboux, RandomClosedFormsAreClosed) {
  const DarbouxChart chart(2);
  Rng rng(70);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(d_poly(random_closed_one_form(rng, chart)).is_zero());
}

TEST(Darboux, IdentityRegistry) {
  for (Identity id : kAllIdentities) EXPECT_EQ(identity_from_name(identity_name(id)), id);
  EXPECT_EQ(identity_name(Identity::BracketJacobi), "bracket-jacobi");
  EXPECT_THROW(identity_from_name("no-such-identity"), UnknownNameError);
}

class IdentityHolds : public ::testing::TestWithParam<std::tuple<Identity, int>> {};

TEST_P(IdentityHolds, OnRandomInputs) {
  const auto [id, n] = GetParam();
  const DarbouxChart chart(n);
  Rng rng(kDefaultSeed + static_cast<int>(id) * 10 + n);
  for (int i = 0; i < 200; ++i) {
    const IdentityCase c = verify_identity(chart, id, rng);
    ASSERT_TRUE(c.defect.is_zero()) << c.inputs << "\ndefect: " << to_string(c.defect, chart.names());
  }
}

INSTANTIATE_TEST_SUITE_P(AllIdentities, IdentityHolds,
                         ::testing::Combine(::testing::ValuesIn(kAllIdentities), ::testing::Values(1, 2)),
                         [](const auto& info) {
                           std::string name(identity_name(std::get<0>(info.param)));
                           for (char& ch : name) {
                             if (ch == '-') ch = '_';
                           }
                           return name + "_2n" + std::to_string(2 * std::get<1>(info.param));
                         });

}  // namespace
