#pragma once

// Symplectic Hodge star, canonical homology operator and Hamiltonian calculus
// for a constant symplectic form.
//
// Conventions (checked by the test suite, not assumed):
//   omega = sum_{mu<nu} w_{mu nu} e_mu ^ e_nu, W = (w_{mu nu}) antisymmetric,
//   W^{-1} = (w^{mu nu}) with w^{mu nu} w_{nu sigma} = delta^mu_sigma;
//   *e_I = i_{v_k} ... i_{v_1} (omega^n/n!), v_j = row I_j of W^{-1};
//   delta = (-1)^{k+1} * d *;
//   X_f^nu = w^{nu mu} d_mu f, so that df = -i_{X_f} omega;
//   {f,g} = omega(X_f, X_g) = X_f(g).

#include <array>
#include <concepts>
#include <vector>

#include "symcoh/ce_model.hpp"
#include "symcoh/exterior.hpp"
#include "symcoh/linalg.hpp"

namespace symcoh {

class SymplecticContext {
 public:
  /// Throws ContextError if omega is not a degree-2 form or is degenerate.
  explicit SymplecticContext(const RForm& omega);

  int dimension() const { return dimension_; }
  int half_dimension() const { return dimension_ / 2; }
  const RForm& omega() const { return omega_; }
  /// w_{mu nu}
  const RationalMatrix& lower() const { return lower_; }
  /// w^{mu nu}
  const RationalMatrix& upper() const { return upper_; }
  /// omega^n / n!
  const RForm& liouville() const { return liouville_; }
  /// omega^k / k!; the unit for k = 0 and the zero form for k < 0.
  RForm omega_power(int k) const;
  /// *e_I as a rational form.
  const RForm& star_of_monomial(MultiIndex idx) const { return star_table_[idx.bits()]; }

 private:
  int dimension_ = 0;
  RForm omega_;
  RationalMatrix lower_;
  RationalMatrix upper_;
  RForm liouville_;
  std::vector<RForm> star_table_;
};

inline const RForm& liouville(const SymplecticContext& ctx) { return ctx.liouville(); }

namespace detail {
template <Scalar S>
int homogeneous_degree(const GradedForm<S>& a, const char* op) {
  const auto support = a.degree_support();
  if (support.size() > 1) throw DegreeError(std::string(op) + " needs a homogeneous form");
  return support.empty() ? -1 : *support.begin();
}
}  // namespace detail

/// Symplectic Hodge star; linear over the coefficient ring.
template <Scalar S>
GradedForm<S> hodge_star(const SymplecticContext& ctx, const GradedForm<S>& a) {
  if (a.generators() != ctx.dimension()) throw ContextError("form does not match the symplectic context");
  detail::homogeneous_degree(a, "hodge_star");
  GradedForm<S> out(ctx.dimension());
  for (const auto& [idx, c] : a.terms()) {
    for (const auto& [jdx, r] : ctx.star_of_monomial(idx).terms()) out.add_term(jdx, c * r);
  }
  return out;
}

/// Canonical homology operator delta = (-1)^{k+1} * d *, for the ambient
/// differential `d` (d_ce on a CE model, the de Rham d on a chart).
template <Scalar S, class Differential>
GradedForm<S> delta_op(const SymplecticContext& ctx, const GradedForm<S>& a, Differential&& d) {
  const int k = detail::homogeneous_degree(a, "delta_op");
  if (k <= 0) return GradedForm<S>(ctx.dimension());
  GradedForm<S> out = hodge_star(ctx, d(hodge_star(ctx, a)));
  return (k % 2 == 1) ? out : -out;
}

/// delta on a CE model.
RForm delta_ce(const SymplecticContext& ctx, const CEModel& model, const RForm& a);

/// Matrix of delta : degree k -> degree k-1 on a CE model.
RationalMatrix delta_matrix(const CEModel& model, int k);

/// dim ker(delta_k) - dim im(delta_{k+1}) on a CE model.
int canonical_betti(const CEModel& model, int k);

// ---------------------------------------------------------------------------
// Calculus for coefficient rings of functions (polynomials, trig polynomials).

template <class S>
concept DifferentiableScalar = Scalar<S> && requires(const S a, int i) {
  { partial(a, i) } -> std::convertible_to<S>;
};

template <DifferentiableScalar S>
using VectorField = std::vector<S>;

/// df
template <DifferentiableScalar S>
GradedForm<S> differential(int generators, const S& f) {
  GradedForm<S> out(generators);
  for (int mu = 0; mu < generators; ++mu) out.add_term(MultiIndex::single(mu), partial(f, mu));
  return out;
}

/// De Rham d acting coefficient-wise.
template <DifferentiableScalar S>
GradedForm<S> exterior_derivative(const GradedForm<S>& a) {
  const int g = a.generators();
  GradedForm<S> out(g);
  for (const auto& [idx, c] : a.terms()) {
    for (int mu = 0; mu < g; ++mu) {
      if (idx.contains(mu)) continue;
      S dc = partial(c, mu);
      if (dc.is_zero()) continue;
      // e_mu ^ e_I
      out.add_term(idx.with(mu), (idx.count_below(mu) & 1) ? -dc : dc);
    }
  }
  return out;
}

/// X_f with df = -i_{X_f} omega.
template <DifferentiableScalar S>
VectorField<S> hamiltonian_vector_field(const SymplecticContext& ctx, const S& f) {
  const int g = ctx.dimension();
  std::vector<S> grad;
  grad.reserve(g);
  for (int mu = 0; mu < g; ++mu) grad.push_back(partial(f, mu));
  VectorField<S> x(g);
  for (int nu = 0; nu < g; ++nu) {
    for (int mu = 0; mu < g; ++mu) {
      const Rational& w = ctx.upper()(nu, mu);
      if (!w.is_zero() && !grad[mu].is_zero()) x[nu] = x[nu] + grad[mu] * w;
    }
  }
  return x;
}

/// omega(X, Y)
template <DifferentiableScalar S>
S omega_pairing(const SymplecticContext& ctx, const VectorField<S>& x, const VectorField<S>& y) {
  const int g = ctx.dimension();
  S out{};
  for (int mu = 0; mu < g; ++mu) {
    if (x[mu].is_zero()) continue;
    for (int nu = 0; nu < g; ++nu) {
      const Rational& w = ctx.lower()(mu, nu);
      if (!w.is_zero() && !y[nu].is_zero()) out = out + x[mu] * y[nu] * w;
    }
  }
  return out;
}

/// {f,g} = omega(X_f, X_g)
template <DifferentiableScalar S>
S poisson_bracket(const SymplecticContext& ctx, const S& f, const S& g) {
  return omega_pairing(ctx, hamiltonian_vector_field(ctx, f), hamiltonian_vector_field(ctx, g));
}

/// X(g) = sum X^nu d_nu g
template <DifferentiableScalar S>
S directional_derivative(const VectorField<S>& x, const S& g) {
  S out{};
  for (std::size_t nu = 0; nu < x.size(); ++nu) {
    if (!x[nu].is_zero()) out = out + x[nu] * partial(g, static_cast<int>(nu));
  }
  return out;
}

/// [X, Y]^nu = X(Y^nu) - Y(X^nu)
template <DifferentiableScalar S>
VectorField<S> lie_bracket(const VectorField<S>& x, const VectorField<S>& y) {
  VectorField<S> out(x.size());
  for (std::size_t nu = 0; nu < x.size(); ++nu) {
    out[nu] = directional_derivative(x, y[nu]) - directional_derivative(y, x[nu]);
  }
  return out;
}

/// i_pi for the Poisson bivector pi = 1/2 pi^{mu nu} d_mu ^ d_nu with
/// pi(df, dg) = {f, g}: i_pi = sum_{mu<nu} pi^{mu nu} i_{d_nu} i_{d_mu}.
template <Scalar S>
GradedForm<S> bivector_contraction(const SymplecticContext& ctx, const GradedForm<S>& a) {
  const int g = ctx.dimension();
  GradedForm<S> out(g);
  for (int mu = 0; mu < g; ++mu) {
    for (int nu = mu + 1; nu < g; ++nu) {
      // pi^{mu nu} = w^{nu mu}
      const Rational& pi = ctx.upper()(nu, mu);
      if (pi.is_zero()) continue;
      out += interior_basis(nu, interior_basis(mu, a)) * S(pi);
    }
  }
  return out;
}

}  // namespace symcoh
