#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcoh/exterior.hpp"
#include "symcoh/linalg.hpp"

namespace symcoh {

using RForm = GradedForm<Rational>;

/// Finite Chevalley-Eilenberg model of a compact symplectic manifold: an
/// exterior algebra on named degree-1 generators with a derivation d given on
/// generators, and a constant symplectic form. The orientation is the product
/// of generators in declaration order, normalised so that it integrates to 1.
struct CEModel {
  std::string name;
  std::vector<std::string> generators;
  /// d(generator i), a degree-2 form, one entry per generator.
  std::vector<RForm> differential;
  RForm omega;
  /// Declared symplectic volume; when empty the Liouville coefficient is used.
  std::optional<Rational> declared_volume;

  int dimension() const { return static_cast<int>(generators.size()); }
  int half_dimension() const { return dimension() / 2; }
  MultiIndex orientation() const { return MultiIndex::full(dimension()); }
};

struct Violation {
  std::string invariant;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const CEModel& model);

/// Throws InvariantError carrying the first violation's witness.
void require_valid(const CEModel& model);

/// The degree +1 derivation extending the differential table.
RForm d_ce(const CEModel& model, const RForm& a);

/// omega^n / n! of the model.
RForm model_liouville(const CEModel& model);

/// Coefficient of omega^n/n! on the orientation monomial, i.e. vol(X).
Rational volume(const CEModel& model);

/// Matrix of d_ce : degree k -> degree k+1 in the canonical multi-index bases.
RationalMatrix d_matrix(const CEModel& model, int k);

/// All multi-indices of degree k among `generators` positions, in canonical order.
std::vector<MultiIndex> basis_of_degree(int generators, int k);

int betti(const CEModel& model, int k);
std::vector<int> betti_numbers(const CEModel& model);

/// Basis of closed degree-1 forms (exact 1-forms vanish in a CE model).
std::vector<RForm> h1_basis(const CEModel& model);

/// Catalog: the standard torus T^{2n} (n = 1, 2, 3) with omega = sum e_{2i-1} ^ e_{2i}.
CEModel torus_model(int n);
/// Thurston's nilmanifold; generators declared (x*, p*, z*, h*).
CEModel thurston_model();

}  // namespace symcoh
