#pragma once

// Polynomial differential forms on a Darboux chart R^{2n} with coordinates
// (q1..qn, p1..pn), generators dq1..dqn, dp1..dpn and omega = sum dq_i ^ dp_i.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symcoh/polynomial.hpp"
#include "symcoh/symplectic.hpp"

namespace symcoh {

using PolyForm = GradedForm<Polynomial>;
using PolyVectorField = VectorField<Polynomial>;

class DarbouxChart {
 public:
  /// n = 1..4
  explicit DarbouxChart(int n);

  int n() const { return n_; }
  int dimension() const { return 2 * n_; }
  const SymplecticContext& context() const { return ctx_; }
  const std::vector<std::string>& names() const { return names_; }

  Polynomial q(int i) const { return Polynomial::variable(i); }
  Polynomial p(int i) const { return Polynomial::variable(n_ + i); }
  PolyForm dq(int i) const { return PolyForm::generator(dimension(), i); }
  PolyForm dp(int i) const { return PolyForm::generator(dimension(), n_ + i); }
  PolyForm function(const Polynomial& f) const { return PolyForm::constant(dimension(), f); }
  /// omega^k/k! with polynomial coefficients.
  PolyForm omega_power(int k) const { return promote<Polynomial>(ctx_.omega_power(k)); }
  PolyForm liouville() const { return omega_power(n_); }

 private:
  static RForm darboux_omega(int n);

  int n_;
  SymplecticContext ctx_;
  std::vector<std::string> names_;
};

PolyForm d_poly(const PolyForm& a);
PolyVectorField ham_vf(const DarbouxChart& chart, const Polynomial& f);
Polynomial poisson(const DarbouxChart& chart, const Polynomial& f, const Polynomial& g);
PolyForm star(const DarbouxChart& chart, const PolyForm& a);
PolyForm delta(const DarbouxChart& chart, const PolyForm& a);
/// delta(a) * d(delta(b)); throws DegreeError unless both are 1-forms.
PolyForm ext_bracket(const DarbouxChart& chart, const PolyForm& a, const PolyForm& b);
/// alpha(v)
Polynomial evaluate_one_form(const PolyForm& alpha, const PolyVectorField& v);

// Sign conventions for identities whose correction terms are not displayed
// with explicit signs. The test suite re-derives each by brute force in 2n = 2.

/// delta(sign * *(f omega^{n-1}/(n-1)!)) = df
inline constexpr int kPrimitiveSign = -1;
/// alpha ^ *delta F + sign * d(alpha ^ *F) = 0 for closed alpha
inline constexpr int kClosedAlphaSign = -1;
/// sum_cycl [[a1,a2],a3] + s1 delta(da1 . d da2 ^ d da3) + s2 d(da1 . {da2, da3}) = 0,
/// writing da for delta(a).
inline constexpr int kJacobiDeltaSign = -1;
inline constexpr int kJacobiExactSign = -1;

PolyForm primitive_defect(const DarbouxChart& chart, const Polynomial& f, int sign);
PolyForm closed_alpha_defect(const DarbouxChart& chart, const PolyForm& alpha, const PolyForm& big_f, int sign);
PolyForm jacobi_defect(const DarbouxChart& chart, const PolyForm& a1, const PolyForm& a2, const PolyForm& a3,
                       int delta_sign, int exact_sign);

// ---------------------------------------------------------------------------
// Random inputs. Polynomials are sparse: 1..4 monomials of total degree <= 3
// with coefficients in {-3..3}.

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

Polynomial random_polynomial(Rng& rng, int variables, int max_degree = 3);
/// Homogeneous degree-k form; each basis monomial is present with probability 1/2
/// (at least one is present when k <= dimension).
PolyForm random_form(Rng& rng, const DarbouxChart& chart, int k);
PolyVectorField random_vector_field(Rng& rng, const DarbouxChart& chart);
/// dh + a constant 1-form.
PolyForm random_closed_one_form(Rng& rng, const DarbouxChart& chart);

// ---------------------------------------------------------------------------
// Identity registry.

enum class Identity {
  StarFormula,
  DeltaK1,
  DeltaK2,
  DeltaPi,
  BracketAntisym,
  BracketJacobi,
  Cyclic4Term,
  CommutatorExact,
  ClosedAlphaExactness,
};

inline constexpr Identity kAllIdentities[] = {
    Identity::StarFormula,    Identity::DeltaK1,         Identity::DeltaK2,
    Identity::DeltaPi,        Identity::BracketAntisym,  Identity::BracketJacobi,
    Identity::Cyclic4Term,    Identity::CommutatorExact, Identity::ClosedAlphaExactness,
};

std::string_view identity_name(Identity id);
/// Throws UnknownNameError.
Identity identity_from_name(std::string_view name);

struct IdentityCase {
  /// Human-readable inputs, enough to replay the case by hand.
  std::string inputs;
  /// Exact defect; zero when the identity holds.
  PolyForm defect;
};

/// Draws fresh inputs from rng and returns the defect of the identity.
IdentityCase verify_identity(const DarbouxChart& chart, Identity id, Rng& rng);

}  // namespace symcoh
