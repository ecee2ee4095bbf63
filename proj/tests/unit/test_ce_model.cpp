#include <gtest/gtest.h>

#include <algorithm>

#include "symcoh/ce_model.hpp"

using namespace symcoh;

namespace {

constexpr int kX = 0, kP = 1, kZ = 2, kH = 3;

RForm gen(int g, int i) { return RForm::generator(g, i); }

bool has_violation(const ValidationReport& r, const std::string& name) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.invariant == name; });
}

CEModel four_generator_model(std::string name) {
  CEModel m;
  m.name = std::move(name);
  m.generators = {"a", "b", "c", "e"};
  for (int i = 0; i < 4; ++i) m.differential.emplace_back(4);
  return m;
}

TEST(CEModel, ThurstonIsValid) {
  const CEModel m = thurston_model();
  const auto r = validate(m);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_EQ(volume(m), Rational(1));
  EXPECT_NO_THROW(require_valid(m));
}

TEST(CEModel, ThurstonDifferentialExamples) {
  const CEModel m = thurston_model();
  EXPECT_EQ(d_ce(m, gen(4, kH)), -wedge(gen(4, kX), gen(4, kP)));
  EXPECT_TRUE(d_ce(m, gen(4, kX)).is_zero());
  // d(h* ^ z*) = -x* ^ p* ^ z*
  EXPECT_EQ(d_ce(m, wedge(gen(4, kH), gen(4, kZ))),
            -wedge(wedge(gen(4, kX), gen(4, kP)), gen(4, kZ)));
  EXPECT_TRUE(d_ce(m, m.omega).is_zero());
}

TEST(CEModel, DegenerateOmegaFailsNondegeneracy) {
  CEModel m = thurston_model();
  m.omega = wedge(gen(4, kH), gen(4, kX));
  const auto r = validate(m);
  EXPECT_TRUE(has_violation(r, "nondegeneracy")) << r.summary();
  EXPECT_THROW(require_valid(m), InvariantError);
}

TEST(CEModel, OddDimensionRejected) {
  CEModel m;
  m.name = "odd";
  m.generators = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) m.differential.emplace_back(3);
  m.omega = wedge(gen(3, 0), gen(3, 1));
  EXPECT_TRUE(has_violation(validate(m), "even dimension"));
}

TEST(CEModel, DSquaredViolationDetected) {
  CEModel m = four_generator_model("bad");
  m.differential[0] = wedge(gen(4, 1), gen(4, 2));  // da = b ^ c
  m.differential[3] = wedge(gen(4, 0), gen(4, 3));  // de = a ^ e
  m.omega = wedge(gen(4, 0), gen(4, 1)) + wedge(gen(4, 2), gen(4, 3));
  const auto r = validate(m);
  EXPECT_TRUE(has_violation(r, "d^2 = 0")) << r.summary();
}

TEST(CEModel, NonClosedOmegaDetected) {
  CEModel m = four_generator_model("open");
  m.differential[3] = -wedge(gen(4, 0), gen(4, 1));  // de = -a ^ b
  // d(c ^ e) = c ^ a ^ b
  m.omega = wedge(gen(4, 0), gen(4, 1)) + wedge(gen(4, 2), gen(4, 3));
  const auto r = validate(m);
  EXPECT_TRUE(has_violation(r, "closed")) << r.summary();
}

TEST(CEModel, OrientationAndDeclaredVolume) {
  CEModel m = torus_model(1);
  m.omega = -m.omega;
  EXPECT_TRUE(has_violation(validate(m), "orientation"));

  CEModel v = torus_model(2);
  v.declared_volume = Rational(2);
  EXPECT_TRUE(has_violation(validate(v), "volume"));
  v.declared_volume = Rational(1);
  EXPECT_TRUE(validate(v).ok());
}

TEST(CEModel, MalformedTablesRejected) {
  CEModel m = torus_model(1);
  m.differential.pop_back();
  EXPECT_TRUE(has_violation(validate(m), "differential table"));

  CEModel w = torus_model(1);
  w.differential[0] = gen(2, 1);
  EXPECT_TRUE(has_violation(validate(w), "differential table"));

  CEModel s = torus_model(1);
  s.omega = gen(2, 0);
  EXPECT_TRUE(has_violation(validate(s), "symplectic form"));
}

TEST(CEModel, ThurstonBettiNumbers) {
  const CEModel m = thurston_model();
  EXPECT_EQ(betti_numbers(m), (std::vector<int>{1, 3, 4, 3, 1}));
  const auto h1 = h1_basis(m);
  ASSERT_EQ(h1.size(), 3u);
  for (const auto& a : h1) EXPECT_TRUE(d_ce(m, a).is_zero());
  EXPECT_THROW(betti(m, 5), DomainError);
  EXPECT_THROW(betti(m, -1), DomainError);
}

TEST(CEModel, TorusBettiAreBinomial) {
  for (int n = 1; n <= 3; ++n) {
    const CEModel m = torus_model(n);
    ASSERT_TRUE(validate(m).ok());
    const int g = 2 * n;
    for (int k = 0; k <= g; ++k) {
      EXPECT_EQ(betti(m, k), static_cast<int>(basis_of_degree(g, k).size()));
    }
  }
  EXPECT_THROW(torus_model(0), DomainError);
  EXPECT_THROW(torus_model(4), DomainError);
}

TEST(CEModel, DualityAndEulerCharacteristic) {
  for (const CEModel& m : {thurston_model(), torus_model(1), torus_model(2), torus_model(3)}) {
    const auto b = betti_numbers(m);
    const int g = m.dimension();
    int euler = 0;
    for (int k = 0; k <= g; ++k) {
      EXPECT_EQ(b[k], b[g - k]) << m.name << " degree " << k;
      euler += (k % 2 ? -1 : 1) * b[k];
    }
    EXPECT_EQ(euler, 0) << m.name;
  }
}

TEST(CEModel, DSquaredVanishesOnEveryBasisForm) {
  const CEModel m = thurston_model();
  for (int k = 0; k + 2 <= m.dimension(); ++k) {
    const auto dk = d_matrix(m, k);
    const auto dk1 = d_matrix(m, k + 1);
    const auto prod = dk1 * dk;
    for (std::size_t r = 0; r < prod.rows(); ++r) {
      for (std::size_t c = 0; c < prod.cols(); ++c) EXPECT_TRUE(prod(r, c).is_zero());
    }
  }
}

TEST(CEModel, BasisOfDegreeIsCanonical) {
  const auto b = basis_of_degree(4, 2);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b.front(), MultiIndex::of({0, 1}));
  EXPECT_EQ(b.back(), MultiIndex::of({2, 3}));
  EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
  EXPECT_TRUE(basis_of_degree(4, 5).empty());
}

}  // namespace
