#include <gtest/gtest.h>

#include "symcoh/catalog.hpp"
#include "symcoh/classification.hpp"

using namespace symcoh;

namespace {

RationalVector unit(int b1, int i) {
  RationalVector v(b1);
  v[i] = Rational(1);
  return v;
}

bool all_zero(const std::vector<Rational>& t) {
  for (const auto& x : t) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<int> component_dims(const H2Report& r) {
  std::vector<int> out;
  for (const auto& c : r.components) out.push_back(c.dim);
  return out;
}

TEST(Classification, ThurstonData) {
  const CohomologyData d = from_ce_model(thurston_model());
  ASSERT_EQ(d.b1, 3);
  EXPECT_EQ(d.labels, (std::vector<std::string>{"x*", "p*", "z*"}));
  EXPECT_EQ(d.vol, Rational(1));
  EXPECT_EQ(d.pairing(0, 1), Rational(0));
  EXPECT_EQ(d.pairing(0, 2), Rational(0));
  EXPECT_EQ(d.pairing(2, 1), Rational(1));
  EXPECT_EQ(d.pairing(1, 2), Rational(-1));
  EXPECT_EQ(d.b_top_minus_1, 3);

  const H2Report sp = h2(d, Algebra2::Sp);
  EXPECT_EQ(sp.total_dim, 6);
  EXPECT_EQ(component_dims(sp), (std::vector<int>{3, 3}));
  EXPECT_EQ(h2(d, Algebra2::Ham).total_dim, 3);
  EXPECT_EQ(h2(d, Algebra2::Poisson).total_dim, 3);
  EXPECT_EQ(h2(d, Algebra2::PoissonCompact).total_dim, 3);
  EXPECT_EQ(center_dim(d), 3);
}

TEST(Classification, PuncturedThurston) {
  const CohomologyData d = puncture(from_ce_model(thurston_model()));
  EXPECT_EQ(d.name, "punctured-thurston");
  const auto kb = ker_b(d);
  ASSERT_EQ(kb.size(), 1u);
  EXPECT_EQ(kb[0], unit(3, 0));
  const H2Report sp = h2(d, Algebra2::Sp);
  EXPECT_EQ(sp.total_dim, 5);
  EXPECT_EQ(component_dims(sp), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(h2(d, Algebra2::Ham).total_dim, 4);
  EXPECT_EQ(h2(d, Algebra2::Poisson).total_dim, 3);
  EXPECT_EQ(center_dim(d), 4);
  EXPECT_THROW(puncture(d), DomainError);
  EXPECT_THROW(transgression(d, unit(3, 1)), DomainError);
  EXPECT_NO_THROW(transgression(d, unit(3, 0)));
}

TEST(Classification, TorusTransgressionCancels) {
  const CohomologyData d = from_ce_model(torus_model(2));
  bool q_seen = false, cyclic_seen = false;
  for (int i = 0; i < d.b1; ++i) {
    const auto terms = transgression_terms(d, unit(d.b1, i));
    EXPECT_TRUE(all_zero(terms.total));
    q_seen |= !all_zero(terms.four_form_part);
    cyclic_seen |= !all_zero(terms.cyclic_part);
  }
  EXPECT_TRUE(q_seen);
  EXPECT_TRUE(cyclic_seen);
  EXPECT_EQ(ker_t(d).size(), 4u);
  EXPECT_EQ(h2(d, Algebra2::Sp).total_dim, 10);
}

TEST(Classification, DirectTorusMatchesCEModel) {
  for (int n = 1; n <= 3; ++n) {
    const CohomologyData a = torus_direct(n);
    const CohomologyData b = from_ce_model(torus_model(n));
    EXPECT_EQ(a.b1, b.b1);
    EXPECT_EQ(a.vol, b.vol);
    EXPECT_EQ(a.pairing, b.pairing) << n;
    EXPECT_EQ(a.four_form, b.four_form) << n;
    EXPECT_EQ(a.b_top_minus_1, b.b_top_minus_1);
    for (Algebra2 alg : {Algebra2::PoissonCompact, Algebra2::Poisson, Algebra2::Ham, Algebra2::Sp}) {
      EXPECT_EQ(h2(a, alg).total_dim, h2(b, alg).total_dim);
    }
  }
  EXPECT_THROW(torus_direct(4), DomainError);
}

TEST(Classification, Surfaces) {
  EXPECT_EQ(h2(sphere_data(), Algebra2::Sp).total_dim, 0);
  EXPECT_EQ(h2(surface_data(1), Algebra2::Sp).total_dim, 3);
  const CohomologyData s2 = surface_data(2);
  EXPECT_EQ(h2(s2, Algebra2::Sp).total_dim, 6);
  EXPECT_TRUE(ker_t(s2).empty());
  const CohomologyData s3 = surface_data(3);
  EXPECT_EQ(h2(s3, Algebra2::Sp).total_dim, 15);
  EXPECT_TRUE(ker_t(s3).empty());
  EXPECT_EQ(s3.labels.front(), "a1");
  EXPECT_THROW(surface_data(0), DomainError);
}

TEST(Classification, PuncturingAddsOneToHam) {
  for (const auto& entry : catalog_entries()) {
    const CohomologyData d = catalog_data(entry.name);
    const int ham = h2(d, Algebra2::Ham).total_dim;
    const int poisson = h2(d, Algebra2::Poisson).total_dim;
    EXPECT_EQ(ham, d.compact() ? poisson : poisson + 1) << entry.name;
    if (d.compact() && d.b1 < 4) {
      for (int i = 0; i < d.b1; ++i) EXPECT_TRUE(all_zero(transgression(d, unit(d.b1, i)))) << entry.name;
    }
  }
}

TEST(Classification, H1Reports) {
  const CohomologyData c = sphere_data();
  const CohomologyData p = puncture(c);
  EXPECT_EQ(h1(c, Algebra1::PoissonCompactZero).dim, 0);
  EXPECT_EQ(h1(c, Algebra1::PoissonCompact).dim, 1);
  EXPECT_EQ(h1(c, Algebra1::Poisson).dim, 1);
  EXPECT_EQ(h1(p, Algebra1::Poisson).dim, 0);
  EXPECT_EQ(h1(c, Algebra1::Ham).dim, 0);
  EXPECT_EQ(algebra_name(Algebra2::Sp), "sp");
}

TEST(Classification, InvalidDataRejected) {
  CohomologyData d = surface_data(1);
  d.pairing(0, 1) = Rational(2);
  EXPECT_THROW(validate(d), InvariantError);

  CohomologyData v = surface_data(1);
  v.vol = Rational(0);
  EXPECT_THROW(direct_data(v), InvariantError);

  CohomologyData l = surface_data(1);
  l.labels.pop_back();
  EXPECT_THROW(validate(l), InvariantError);

  CohomologyData q = torus_direct(2);
  q.four_form[0] = Rational(1);  // Q(1,1,1,1) must vanish
  EXPECT_THROW(validate(q), InvariantError);

  CohomologyData s = torus_direct(1);
  s.four_form.push_back(Rational(0));
  EXPECT_THROW(validate(s), InvariantError);
}

TEST(Catalog, NamesResolve) {
  const auto entries = catalog_entries();
  ASSERT_FALSE(entries.empty());
  EXPECT_EQ(entries.front().name, "torus(1)");
  for (const auto& e : entries) EXPECT_NO_THROW(catalog_data(e.name)) << e.name;
  EXPECT_TRUE(catalog_model("thurston").has_value());
  EXPECT_FALSE(catalog_model("sphere").has_value());
  EXPECT_EQ(catalog_data("surface(7)").b1, 14);
  EXPECT_THROW(catalog_data("klein-bottle"), UnknownNameError);
  EXPECT_THROW(catalog_data("punctured-punctured-sphere"), DomainError);
}

}  // namespace
