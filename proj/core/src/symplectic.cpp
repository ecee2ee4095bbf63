#include "symcoh/symplectic.hpp"

namespace symcoh {

SymplecticContext::SymplecticContext(const RForm& omega) : dimension_(omega.generators()), omega_(omega) {
  if (dimension_ == 0 || dimension_ % 2 != 0) throw ContextError("symplectic context needs an even dimension");
  if (!omega.is_homogeneous(2) || omega.is_zero()) throw ContextError("omega must be a nonzero 2-form");

  const auto g = static_cast<std::size_t>(dimension_);
  lower_ = RationalMatrix(g, g);
  for (const auto& [idx, c] : omega.terms()) {
    const auto pos = idx.positions();
    lower_(pos[0], pos[1]) = c;
    lower_(pos[1], pos[0]) = -c;
  }

  liouville_ = wedge_power(omega, half_dimension()) * (Rational(1) / factorial(half_dimension()));
  if (liouville_.is_zero()) throw ContextError("omega is degenerate: omega^n/n! = 0");
  upper_ = inverse(lower_);

  const std::uint32_t count = 1u << dimension_;
  star_table_.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    RForm acc = liouville_;
    for (int p : MultiIndex::from_bits(bits).positions()) {
      std::vector<Rational> v(g);
      for (std::size_t nu = 0; nu < g; ++nu) v[nu] = upper_(p, nu);
      acc = interior(v, acc);
    }
    star_table_.push_back(std::move(acc));
  }
}

RForm SymplecticContext::omega_power(int k) const {
  if (k < 0) return RForm(dimension_);
  return wedge_power(omega_, k) * (Rational(1) / factorial(k));
}

RForm delta_ce(const SymplecticContext& ctx, const CEModel& model, const RForm& a) {
  return delta_op(ctx, a, [&](const RForm& x) { return d_ce(model, x); });
}

RationalMatrix delta_matrix(const CEModel& model, int k) {
  const SymplecticContext ctx(model.omega);
  const int g = model.dimension();
  const auto src = basis_of_degree(g, k);
  const auto dst = basis_of_degree(g, k - 1);
  RationalMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const RForm image = delta_ce(ctx, model, RForm::monomial(g, src[c]));
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = image.coefficient_of(dst[r]);
  }
  return m;
}

int canonical_betti(const CEModel& model, int k) {
  const int g = model.dimension();
  if (k < 0 || k > g) throw DomainError("degree out of range for canonical_betti");
  const auto dim = static_cast<int>(basis_of_degree(g, k).size());
  const int rank_out = k > 0 ? static_cast<int>(rank(delta_matrix(model, k))) : 0;
  const int rank_in = k < g ? static_cast<int>(rank(delta_matrix(model, k + 1))) : 0;
  return dim - rank_out - rank_in;
}

}  // namespace symcoh
