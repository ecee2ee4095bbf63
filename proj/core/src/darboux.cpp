#include "symcoh/darboux.hpp"

#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

RForm DarbouxChart::darboux_omega(int n) {
  if (n < 1 || 2 * n > Monomial::kMaxVariables) throw ContextError("Darboux chart needs 1 <= n <= 4");
  RForm omega(2 * n);
  for (int i = 0; i < n; ++i) omega.add_term(MultiIndex::of({i, n + i}), Rational(1));
  return omega;
}

DarbouxChart::DarbouxChart(int n) : n_(n), ctx_(darboux_omega(n)) {
  for (int i = 1; i <= n; ++i) names_.push_back("q" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names_.push_back("p" + std::to_string(i));
}

PolyForm d_poly(const PolyForm& a) { return exterior_derivative(a); }

PolyVectorField ham_vf(const DarbouxChart& chart, const Polynomial& f) {
  return hamiltonian_vector_field(chart.context(), f);
}

Polynomial poisson(const DarbouxChart& chart, const Polynomial& f, const Polynomial& g) {
  return poisson_bracket(chart.context(), f, g);
}

PolyForm star(const DarbouxChart& chart, const PolyForm& a) { return hodge_star(chart.context(), a); }

PolyForm delta(const DarbouxChart& chart, const PolyForm& a) {
  return delta_op(chart.context(), a, [](const PolyForm& x) { return d_poly(x); });
}

namespace {

void require_one_form(const PolyForm& a, const char* what) {
  if (!a.is_homogeneous(1)) throw DegreeError(std::string(what) + " needs 1-forms");
}

Polynomial scalar_part(const PolyForm& a) { return a.coefficient_of(MultiIndex{}); }

}  // namespace

PolyForm ext_bracket(const DarbouxChart& chart, const PolyForm& a, const PolyForm& b) {
  require_one_form(a, "ext_bracket");
  require_one_form(b, "ext_bracket");
  const Polynomial da = scalar_part(delta(chart, a));
  return d_poly(delta(chart, b)) * da;
}

Polynomial evaluate_one_form(const PolyForm& alpha, const PolyVectorField& v) {
  return scalar_part(interior(v, alpha));
}

PolyForm primitive_defect(const DarbouxChart& chart, const Polynomial& f, int sign) {
  const PolyForm lifted = chart.omega_power(chart.n() - 1) * f * Polynomial(Rational(sign));
  return delta(chart, star(chart, lifted)) - d_poly(chart.function(f));
}

PolyForm closed_alpha_defect(const DarbouxChart& chart, const PolyForm& alpha, const PolyForm& big_f, int sign) {
  return wedge(alpha, star(chart, delta(chart, big_f))) +
         d_poly(wedge(alpha, star(chart, big_f))) * Polynomial(Rational(sign));
}

PolyForm jacobi_defect(const DarbouxChart& chart, const PolyForm& a1, const PolyForm& a2, const PolyForm& a3,
                       int delta_sign, int exact_sign) {
  PolyForm cyclic = ext_bracket(chart, ext_bracket(chart, a1, a2), a3) +
                    ext_bracket(chart, ext_bracket(chart, a2, a3), a1) +
                    ext_bracket(chart, ext_bracket(chart, a3, a1), a2);
  const Polynomial f1 = scalar_part(delta(chart, a1));
  const Polynomial f2 = scalar_part(delta(chart, a2));
  const Polynomial f3 = scalar_part(delta(chart, a3));
  const PolyForm two_form = wedge(d_poly(chart.function(f2)), d_poly(chart.function(f3))) * f1;
  const PolyForm exact = d_poly(chart.function(f1 * poisson(chart, f2, f3)));
  return cyclic + delta(chart, two_form) * Polynomial(Rational(delta_sign)) +
         exact * Polynomial(Rational(exact_sign));
}

// ---------------------------------------------------------------------------

Polynomial random_polynomial(Rng& rng, int variables, int max_degree) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> var(0, variables - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial out;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int deg = degree(rng);
    for (int e = 0; e < deg; ++e) m = m * Monomial::variable(var(rng));
    out.add_term(m, Rational(coeff(rng)));
  }
  return out;
}

PolyForm random_form(Rng& rng, const DarbouxChart& chart, int k) {
  const int g = chart.dimension();
  PolyForm out(g);
  if (k < 0 || k > g) return out;
  const auto basis = basis_of_degree(g, k);
  std::bernoulli_distribution keep(0.5);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  const std::size_t forced = pick(rng);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == forced || keep(rng)) out.add_term(basis[i], random_polynomial(rng, g));
  }
  return out;
}

PolyVectorField random_vector_field(Rng& rng, const DarbouxChart& chart) {
  PolyVectorField v;
  for (int mu = 0; mu < chart.dimension(); ++mu) v.push_back(random_polynomial(rng, chart.dimension()));
  return v;
}

PolyForm random_closed_one_form(Rng& rng, const DarbouxChart& chart) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  PolyForm out = d_poly(chart.function(random_polynomial(rng, chart.dimension())));
  for (int mu = 0; mu < chart.dimension(); ++mu) {
    out.add_term(MultiIndex::single(mu), Polynomial(Rational(coeff(rng))));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct NamedIdentity {
  Identity id;
  std::string_view name;
};

constexpr NamedIdentity kNames[] = {
    {Identity::StarFormula, "star-formula"},
    {Identity::DeltaK1, "delta-k1"},
    {Identity::DeltaK2, "delta-k2"},
    {Identity::DeltaPi, "delta-pi"},
    {Identity::BracketAntisym, "bracket-antisym"},
    {Identity::BracketJacobi, "bracket-jacobi"},
    {Identity::Cyclic4Term, "cyclic-4term"},
    {Identity::CommutatorExact, "commutator-exact"},
    {Identity::ClosedAlphaExactness, "closed-alpha-exactness"},
};

class CaseLog {
 public:
  explicit CaseLog(const DarbouxChart& chart) : names_(chart.names()) {}
  CaseLog& add(const char* label, const Polynomial& f) {
    sep();
    os_ << label << " = " << f.str(names_);
    return *this;
  }
  CaseLog& add(const char* label, const PolyForm& a) {
    sep();
    os_ << label << " = " << form_str(a);
    return *this;
  }
  CaseLog& add(const char* label, const PolyVectorField& v) {
    sep();
    os_ << label << " = (";
    for (std::size_t i = 0; i < v.size(); ++i) os_ << (i ? ", " : "") << v[i].str(names_);
    os_ << ")";
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  void sep() {
    if (!first_) os_ << "; ";
    first_ = false;
  }
  std::string form_str(const PolyForm& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, c] : a.terms()) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str(names_) + ")";
      for (int p : idx.positions()) out += "*d" + names_[p];
    }
    return out;
  }

  std::vector<std::string> names_;
  std::ostringstream os_;
  bool first_ = true;
};

PolyForm df(const DarbouxChart& chart, const Polynomial& f) { return d_poly(chart.function(f)); }

IdentityCase star_formula(const DarbouxChart& chart, Rng& rng) {
  const int g = chart.dimension();
  const Polynomial f0 = random_polynomial(rng, g);
  const Polynomial f1 = random_polynomial(rng, g);
  const Polynomial f2 = random_polynomial(rng, g);
  const PolyForm vol = chart.liouville();
  const PolyVectorField x1 = ham_vf(chart, f1);
  const PolyVectorField x2 = ham_vf(chart, f2);
  // The defects live in the distinct degrees 2n, 2n-1, 2n-2, so their sum
  // vanishes iff each does.
  PolyForm defect = star(chart, chart.function(f0)) - vol * f0;
  defect += star(chart, df(chart, f1) * f0) + interior(x1, vol) * f0;
  defect += star(chart, wedge(df(chart, f1), df(chart, f2)) * f0) - interior(x2, interior(x1, vol)) * f0;
  return {CaseLog(chart).add("f0", f0).add("f1", f1).add("f2", f2).str(), defect};
}

IdentityCase delta_k1(const DarbouxChart& chart, Rng& rng) {
  const int g = chart.dimension();
  const Polynomial f0 = random_polynomial(rng, g);
  const Polynomial f1 = random_polynomial(rng, g);
  PolyForm defect = delta(chart, df(chart, f1) * f0) - chart.function(poisson(chart, f0, f1));
  return {CaseLog(chart).add("f0", f0).add("f1", f1).str(), defect};
}

IdentityCase delta_k2(const DarbouxChart& chart, Rng& rng) {
  const int g = chart.dimension();
  const Polynomial f0 = random_polynomial(rng, g);
  const Polynomial f1 = random_polynomial(rng, g);
  const Polynomial f2 = random_polynomial(rng, g);
  const PolyForm lhs = delta(chart, wedge(df(chart, f1), df(chart, f2)) * f0);
  const PolyForm rhs = df(chart, f2) * poisson(chart, f0, f1) - df(chart, f1) * poisson(chart, f0, f2) -
                       df(chart, poisson(chart, f1, f2)) * f0;
  return {CaseLog(chart).add("f0", f0).add("f1", f1).add("f2", f2).str(), lhs - rhs};
}

IdentityCase delta_pi(const DarbouxChart& chart, Rng& rng) {
  // One random form per degree; the defects have distinct degrees.
  const SymplecticContext& ctx = chart.context();
  CaseLog log(chart);
  PolyForm defect(chart.dimension());
  for (int k = 0; k <= chart.dimension(); ++k) {
    const PolyForm a = random_form(rng, chart, k);
    defect += delta(chart, a) - (bivector_contraction(ctx, d_poly(a)) - d_poly(bivector_contraction(ctx, a)));
    const std::string label = "a" + std::to_string(k);
    log.add(label.c_str(), a);
  }
  return {log.str(), defect};
}

IdentityCase bracket_antisym(const DarbouxChart& chart, Rng& rng) {
  const PolyForm a = random_form(rng, chart, 1);
  const PolyForm b = random_form(rng, chart, 1);
  const Polynomial da = delta(chart, a).coefficient_of(MultiIndex{});
  const Polynomial db = delta(chart, b).coefficient_of(MultiIndex{});
  PolyForm defect = ext_bracket(chart, a, b) + ext_bracket(chart, b, a) - df(chart, da * db);
  return {CaseLog(chart).add("alpha", a).add("beta", b).str(), defect};
}

IdentityCase bracket_jacobi(const DarbouxChart& chart, Rng& rng) {
  const PolyForm a1 = random_form(rng, chart, 1);
  const PolyForm a2 = random_form(rng, chart, 1);
  const PolyForm a3 = random_form(rng, chart, 1);
  return {CaseLog(chart).add("alpha1", a1).add("alpha2", a2).add("alpha3", a3).str(),
          jacobi_defect(chart, a1, a2, a3, kJacobiDeltaSign, kJacobiExactSign)};
}

IdentityCase cyclic_4term(const DarbouxChart& chart, Rng& rng) {
  const SymplecticContext& ctx = chart.context();
  const PolyForm alpha = random_form(rng, chart, 1);
  const PolyVectorField v = random_vector_field(rng, chart);
  const PolyVectorField v1 = random_vector_field(rng, chart);
  const PolyVectorField v2 = random_vector_field(rng, chart);
  const PolyVectorField v3 = random_vector_field(rng, chart);
  const PolyForm omega = chart.omega_power(1);
  const PolyForm vol = chart.liouville();
  CaseLog log(chart);
  log.add("alpha", alpha).add("v", v).add("v1", v1).add("v2", v2).add("v3", v3);

  PolyForm first = vol * evaluate_one_form(alpha, v) -
                   wedge(wedge(alpha, interior(v, omega)), chart.omega_power(chart.n() - 1));
  if (!first.is_zero()) return {log.str(), first};

  const Polynomial cyclic = evaluate_one_form(alpha, v1) * omega_pairing(ctx, v2, v3) +
                            evaluate_one_form(alpha, v2) * omega_pairing(ctx, v3, v1) +
                            evaluate_one_form(alpha, v3) * omega_pairing(ctx, v1, v2);
  PolyForm rhs = wedge(alpha, interior(v1, omega));
  rhs = wedge(rhs, interior(v2, omega));
  rhs = wedge(rhs, interior(v3, omega));
  rhs = wedge(rhs, chart.omega_power(chart.n() - 2));
  return {log.str(), vol * cyclic - rhs};
}

IdentityCase commutator_exact(const DarbouxChart& chart, Rng& rng) {
  const int g = chart.dimension();
  const Polynomial gg = random_polynomial(rng, g);
  const Polynomial h = random_polynomial(rng, g);
  PolyForm defect = chart.liouville() * poisson(chart, gg, h) -
                    wedge(wedge(df(chart, gg), df(chart, h)), chart.omega_power(chart.n() - 1));
  return {CaseLog(chart).add("g", gg).add("h", h).str(), defect};
}

IdentityCase closed_alpha_exactness(const DarbouxChart& chart, Rng& rng) {
  const PolyForm alpha = random_closed_one_form(rng, chart);
  const PolyForm big_f = random_form(rng, chart, 2);
  return {CaseLog(chart).add("alpha", alpha).add("F", big_f).str(),
          closed_alpha_defect(chart, alpha, big_f, kClosedAlphaSign)};
}

}  // namespace

std::string_view identity_name(Identity id) {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.name;
  }
  throw DomainError("unknown identity");
}

Identity identity_from_name(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.id;
  }
  throw UnknownNameError("unknown identity '" + std::string(name) + "'");
}

IdentityCase verify_identity(const DarbouxChart& chart, Identity id, Rng& rng) {
  switch (id) {
    case Identity::StarFormula: return star_formula(chart, rng);
    case Identity::DeltaK1: return delta_k1(chart, rng);
    case Identity::DeltaK2: return delta_k2(chart, rng);
    case Identity::DeltaPi: return delta_pi(chart, rng);
    case Identity::BracketAntisym: return bracket_antisym(chart, rng);
    case Identity::BracketJacobi: return bracket_jacobi(chart, rng);
    case Identity::Cyclic4Term: return cyclic_4term(chart, rng);
    case Identity::CommutatorExact: return commutator_exact(chart, rng);
    case Identity::ClosedAlphaExactness: return closed_alpha_exactness(chart, rng);
  }
  throw DomainError("unknown identity");
}

}  // namespace symcoh
