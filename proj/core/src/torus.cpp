#include "symcoh/torus.hpp"

#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

TauValue::TauValue(Rational coefficient, int exponent)
    : coefficient_(std::move(coefficient)), exponent_(coefficient_.is_zero() ? 0 : exponent) {}

TauValue operator+(const TauValue& a, const TauValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exponent_ != b.exponent_) {
    throw DomainError("cannot add tau^" + std::to_string(a.exponent_) + " and tau^" + std::to_string(b.exponent_));
  }
  return {a.coefficient_ + b.coefficient_, a.exponent_};
}

TauValue operator*(const TauValue& a, const TauValue& b) {
  return {a.coefficient_ * b.coefficient_, a.exponent_ + b.exponent_};
}

TauValue operator/(const TauValue& a, const TauValue& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return {a.coefficient_ / b.coefficient_, a.exponent_ - b.exponent_};
}

bool operator==(const TauValue& a, const TauValue& b) {
  return a.coefficient_ == b.coefficient_ && a.exponent_ == b.exponent_;
}

std::string TauValue::str() const {
  if (is_zero()) return "0";
  if (exponent_ == 0) return coefficient_.str();
  std::string out = coefficient_ == Rational(1) ? "" : (coefficient_ == Rational(-1) ? "-" : coefficient_.str() + "*");
  out += "tau";
  if (exponent_ != 1) out += "^" + std::to_string(exponent_);
  return out;
}

std::ostream& operator<<(std::ostream& os, const TauValue& v) { return os << v.str(); }

// ---------------------------------------------------------------------------

namespace {

RForm standard_omega(int n) {
  if (n < 1 || 2 * n > WaveVector::kMaxComponents) throw ContextError("torus needs 1 <= n <= 4");
  RForm omega(2 * n);
  for (int i = 0; i < n; ++i) omega.add_term(MultiIndex::of({i, n + i}), Rational(1));
  return omega;
}

}  // namespace

Torus::Torus(int n) : n_(n), ctx_(standard_omega(n)) {}

void Torus::require_fits(const TrigFunction& f) const {
  if (f.max_variable() >= dimension()) {
    throw ContextError("function depends on coordinate " + std::to_string(f.max_variable() + 1) +
                       " of a torus of dimension " + std::to_string(dimension()));
  }
}

TrigOneForm to_trig(const ConstantOneForm& a) {
  TrigOneForm out;
  out.reserve(a.components.size());
  for (const auto& c : a.components) out.emplace_back(c);
  return out;
}

TrigOneForm exact_one_form(const Torus& torus, const TrigFunction& h) {
  torus.require_fits(h);
  TrigOneForm out;
  for (int mu = 0; mu < torus.dimension(); ++mu) out.push_back(partial(h, mu));
  return out;
}

TrigFunction pair(const TrigOneForm& alpha, const TrigVectorField& v) {
  if (alpha.size() != v.size()) throw ContextError("1-form and vector field dimensions differ");
  TrigFunction out;
  for (std::size_t mu = 0; mu < v.size(); ++mu) {
    if (!alpha[mu].is_zero() && !v[mu].is_zero()) out += alpha[mu] * v[mu];
  }
  return out;
}

TrigVectorField ham_vf(const Torus& torus, const TrigFunction& f) {
  torus.require_fits(f);
  return hamiltonian_vector_field(torus.context(), f);
}

TrigFunction tbracket(const Torus& torus, const TrigFunction& f, const TrigFunction& g) {
  torus.require_fits(f);
  torus.require_fits(g);
  return poisson_bracket(torus.context(), f, g);
}

TrigFunction directional(const std::vector<Rational>& v, const TrigFunction& f) {
  TrigFunction out;
  for (std::size_t mu = 0; mu < v.size(); ++mu) {
    if (!v[mu].is_zero()) out += partial(f, static_cast<int>(mu)) * v[mu];
  }
  return out;
}

TauValue integrate(const Torus& torus, const TrigFunction& f) {
  torus.require_fits(f);
  return {f.constant_term(), torus.dimension()};
}

TauValue character(const Torus& torus, const TrigFunction& f) { return integrate(torus, f); }

Rational normalized_character(const Torus& torus, const TrigFunction& f) {
  return (integrate(torus, f) / torus.volume()).coefficient();
}

TauValue roger_cocycle(const Torus& torus, const ConstantOneForm& alpha, const TrigFunction& f,
                       const TrigFunction& g) {
  return roger_cocycle(torus, to_trig(alpha), f, g);
}

TauValue roger_cocycle(const Torus& torus, const TrigOneForm& alpha, const TrigFunction& f, const TrigFunction& g) {
  if (static_cast<int>(alpha.size()) != torus.dimension()) throw ContextError("1-form does not match the torus");
  return integrate(torus, f * pair(alpha, ham_vf(torus, g)));
}

Rational ks_cocycle(const Torus& torus, const TrigFunction& f, const TrigFunction& g) {
  return tbracket(torus, f, g).eval_at_zero();
}

TauValue singular_cocycle(const Torus& torus, int j, const Rational& angle, const TrigFunction& f,
                          const TrigFunction& g) {
  const int dim = torus.dimension();
  if (j < 0 || j >= dim) throw DomainError("slice coordinate out of range");
  bool half = false;
  if (angle == Rational(1, 2)) {
    half = true;
  } else if (!angle.is_zero()) {
    throw DomainError("unsupported slice angle " + angle.str() + "*tau (use 0 or 1/2)");
  }
  torus.require_fits(f);
  torus.require_fits(g);
  const SymplecticContext& ctx = torus.context();

  TrigForm dg(dim);
  for (int mu = 0; mu < dim; ++mu) dg.add_term(MultiIndex::single(mu), partial(g, mu));
  const TrigForm integrand = wedge(dg * f, promote<TrigFunction>(ctx.omega_power(torus.n() - 1)));

  const MultiIndex slice = MultiIndex::full(dim).without(j);
  const Rational orientation = interior_basis(j, ctx.liouville()).coefficient_of(slice);
  const TrigFunction density = integrand.coefficient_of(slice) * (Rational(1) / orientation);
  return {density.substitute(j, half).constant_term(), dim - 1};
}

Rational ks_primitive(const Torus& torus, const TrigFunction& f) {
  return f.eval_at_zero() - normalized_character(torus, f);
}

TauValue exact_roger_primitive(const Torus& torus, const TrigFunction& h, const TrigFunction& f) {
  return integrate(torus, (TrigFunction(f.eval_at_zero()) - f) * h);
}

TauValue theta_cochain(const Torus& torus, const TrigOneForm& alpha, const std::vector<Rational>& v,
                       const TrigFunction& f) {
  TrigVectorField field;
  for (const auto& c : v) field.emplace_back(c);
  return integrate(torus, pair(alpha, field) * (f - TrigFunction(f.eval_at_zero())));
}

TauValue lie_derivative_roger(const Torus& torus, const TrigOneForm& alpha, const std::vector<Rational>& v,
                              const TrigFunction& f, const TrigFunction& g) {
  return -roger_cocycle(torus, alpha, directional(v, f), g) - roger_cocycle(torus, alpha, f, directional(v, g));
}

// ---------------------------------------------------------------------------

TrigFunction random_trig(TorusRng& rng, int dims) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> component(-2, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::bernoulli_distribution use_cos(0.5);
  TrigFunction out;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    WaveVector k;
    for (int j = 0; j < dims; ++j) k.set(j, component(rng));
    const Rational c(coeff(rng));
    if (use_cos(rng)) out.add_cos(k, c);
    else out.add_sin(k, c);
  }
  return out;
}

ConstantOneForm random_constant_one_form(TorusRng& rng, int dims) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  ConstantOneForm a;
  for (int j = 0; j < dims; ++j) a.components.emplace_back(coeff(rng));
  return a;
}

}  // namespace symcoh
