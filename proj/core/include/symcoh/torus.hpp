#pragma once

// Exact calculus on the torus T^{2n} = R^{2n}/(tau Z)^{2n}, tau = 2 pi, with
// coordinates theta = (q1..qn, p1..pn) and omega = sum dq_i ^ dp_i.
// Integrals are reported as r * tau^m.

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "symcoh/symplectic.hpp"
#include "symcoh/trig.hpp"

namespace symcoh {

/// r * tau^m. Zero has no exponent; sums of nonzero values need equal exponents.
class TauValue {
 public:
  TauValue() = default;
  TauValue(Rational coefficient, int exponent);

  const Rational& coefficient() const { return coefficient_; }
  int exponent() const { return exponent_; }
  bool is_zero() const { return coefficient_.is_zero(); }

  TauValue operator-() const { return {-coefficient_, exponent_}; }
  /// Throws DomainError when both operands are nonzero with different exponents.
  friend TauValue operator+(const TauValue& a, const TauValue& b);
  friend TauValue operator-(const TauValue& a, const TauValue& b) { return a + (-b); }
  friend TauValue operator*(const TauValue& a, const TauValue& b);
  friend TauValue operator*(const TauValue& a, const Rational& r) { return {a.coefficient_ * r, a.exponent_}; }
  friend TauValue operator*(const Rational& r, const TauValue& a) { return a * r; }
  /// Throws DomainError on division by zero.
  friend TauValue operator/(const TauValue& a, const TauValue& b);
  friend bool operator==(const TauValue& a, const TauValue& b);

  std::string str() const;

 private:
  Rational coefficient_;
  int exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const TauValue& v);

using TrigForm = GradedForm<TrigFunction>;
using TrigVectorField = VectorField<TrigFunction>;

class Torus {
 public:
  /// n = 1..4
  explicit Torus(int n);

  int n() const { return n_; }
  int dimension() const { return 2 * n_; }
  const SymplecticContext& context() const { return ctx_; }
  /// tau^{2n}
  TauValue volume() const { return {Rational(1), dimension()}; }
  /// Throws ContextError if f uses coordinates beyond 2n.
  void require_fits(const TrigFunction& f) const;

 private:
  int n_;
  SymplecticContext ctx_;
};

/// Constant 1-form sum a_mu dtheta^mu.
struct ConstantOneForm {
  std::vector<Rational> components;
};

/// A 1-form with trigonometric coefficients, one per coordinate.
using TrigOneForm = std::vector<TrigFunction>;

TrigOneForm to_trig(const ConstantOneForm& a);
/// dh
TrigOneForm exact_one_form(const Torus& torus, const TrigFunction& h);
/// alpha(v)
TrigFunction pair(const TrigOneForm& alpha, const TrigVectorField& v);

TrigVectorField ham_vf(const Torus& torus, const TrigFunction& f);
TrigFunction tbracket(const Torus& torus, const TrigFunction& f, const TrigFunction& g);
/// v . f for a constant vector v.
TrigFunction directional(const std::vector<Rational>& v, const TrigFunction& f);

/// int_X f omega^n/n!
TauValue integrate(const Torus& torus, const TrigFunction& f);
/// Same as integrate.
TauValue character(const Torus& torus, const TrigFunction& f);
/// (1/vol) int_X f omega^n/n!
Rational normalized_character(const Torus& torus, const TrigFunction& f);

/// psi_alpha(f, g) = int f alpha(X_g) omega^n/n!
TauValue roger_cocycle(const Torus& torus, const ConstantOneForm& alpha, const TrigFunction& f,
                       const TrigFunction& g);
TauValue roger_cocycle(const Torus& torus, const TrigOneForm& alpha, const TrigFunction& f, const TrigFunction& g);

/// {f, g}(0)
Rational ks_cocycle(const Torus& torus, const TrigFunction& f, const TrigFunction& g);

/// psi_N(f, g) = int_N f dg ^ omega^{n-1}/(n-1)! over N = {theta_j = angle * tau},
/// oriented by i_{d/dtheta_j}(omega^n/n!). angle must be 0 or 1/2.
TauValue singular_cocycle(const Torus& torus, int j, const Rational& angle, const TrigFunction& f,
                          const TrigFunction& g);

/// Lie algebra differential of an alternating k-cochain on ham(X), using
/// [X_f, X_g] = X_{{f,g}}:
///   dpsi(x_0..x_k) = sum_{i<j} (-1)^{i+j} psi([x_i,x_j], x_0 .. ^i .. ^j .. x_k).
/// `psi` takes a std::vector<TrigFunction> of k arguments.
template <class Value, class Cochain>
Value cochain_differential(const Torus& torus, const Cochain& psi, const std::vector<TrigFunction>& x) {
  Value out{};
  const std::size_t m = x.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<TrigFunction> args;
      args.reserve(m - 1);
      args.push_back(tbracket(torus, x[i], x[j]));
      for (std::size_t l = 0; l < m; ++l) {
        if (l != i && l != j) args.push_back(x[l]);
      }
      const Value term = psi(args);
      out = ((i + j) % 2 == 0) ? out + term : out - term;
    }
  }
  return out;
}

/// dpsi(f, g, h) for a 2-cochain psi(f, g).
template <class Value, class Cochain2>
Value cocycle_defect(const Torus& torus, const Cochain2& psi, const TrigFunction& f, const TrigFunction& g,
                     const TrigFunction& h) {
  return cochain_differential<Value>(
      torus, [&](const std::vector<TrigFunction>& a) { return psi(a[0], a[1]); }, {f, g, h});
}

/// dchi(f, g) for a 1-cochain chi(f).
template <class Value, class Cochain1>
Value coboundary(const Torus& torus, const Cochain1& chi, const TrigFunction& f, const TrigFunction& g) {
  return cochain_differential<Value>(
      torus, [&](const std::vector<TrigFunction>& a) { return chi(a[0]); }, {f, g});
}

/// ks_cocycle + kKsTrivialSign * d(ks_primitive) = 0 on a compact torus.
inline constexpr int kKsTrivialSign = 1;

/// chi(X_f) = f(0) - <f>, the normalised primitive of psi_KS.
Rational ks_primitive(const Torus& torus, const TrigFunction& f);
/// chi_h(X_f) = int (f(0) - f) h omega^n/n!
TauValue exact_roger_primitive(const Torus& torus, const TrigFunction& h, const TrigFunction& f);
/// theta_alpha(v)(X_f) = int alpha(v) (f - f(0)) omega^n/n! for a constant vector v.
TauValue theta_cochain(const Torus& torus, const TrigOneForm& alpha, const std::vector<Rational>& v,
                       const TrigFunction& f);
/// (L_v psi_alpha)(f, g) = -psi_alpha(v.f, g) - psi_alpha(f, v.g)
TauValue lie_derivative_roger(const Torus& torus, const TrigOneForm& alpha, const std::vector<Rational>& v,
                              const TrigFunction& f, const TrigFunction& g);

// ---------------------------------------------------------------------------
// Random inputs: 1..3 terms, wave vector components in {-2..2}, coefficients in {-3..3}.

using TorusRng = std::mt19937_64;

TrigFunction random_trig(TorusRng& rng, int dims);
ConstantOneForm random_constant_one_form(TorusRng& rng, int dims);

}  // namespace symcoh
