#pragma once

// Cohomology data of a connected symplectic manifold and the H^1/H^2 reports
// for the Lie algebras C_c(X), C(X), ham(X) and sp(X) computed from it.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcoh/ce_model.hpp"
#include "symcoh/linalg.hpp"

namespace symcoh {

enum class Compactness { Compact, PuncturedCompact };

struct CohomologyData {
  std::string name;
  int b1 = 0;
  std::vector<std::string> labels;
  Rational vol{1};
  /// P(i,j) = int a_i ^ a_j ^ omega^{n-1}/(n-1)!
  RationalMatrix pairing;
  /// Q(i,j,k,l) = int a_i ^ a_j ^ a_k ^ a_l ^ omega^{n-2}/(n-2)!, flattened; zero when n < 2.
  std::vector<Rational> four_form;
  Compactness compactness = Compactness::Compact;
  /// dim H^{2n-1}
  int b_top_minus_1 = 0;
  /// Alternating form whose kernel is Ker B; the pairing when absent.
  std::optional<RationalMatrix> independent_b;

  bool compact() const { return compactness == Compactness::Compact; }
  const Rational& q(int i, int j, int k, int l) const {
    return four_form[((static_cast<std::size_t>(i) * b1 + j) * b1 + k) * b1 + l];
  }
  const RationalMatrix& b_form() const { return independent_b ? *independent_b : pairing; }
};

/// Throws InvariantError on: negative b1, vol <= 0, shape mismatches, P or B not
/// antisymmetric, Q not alternating.
void validate(const CohomologyData& data);

/// Requires a valid model; integrals are coefficients on the orientation monomial.
CohomologyData from_ce_model(const CEModel& model);

/// Checks invariants of hand-entered data.
CohomologyData direct_data(CohomologyData data);
CohomologyData sphere_data();
/// Closed surface of genus g >= 1 with basis (a1, b1, ..., ag, bg).
CohomologyData surface_data(int g);
/// T^{2n} entered directly (n = 1..3), basis e1..e2n.
CohomologyData torus_direct(int n);

/// Same data on X minus a point. Throws DomainError if already punctured.
CohomologyData puncture(const CohomologyData& data);

/// Alternating 3-tensor on H^1, flattened b1^3.
using Tensor3 = std::vector<Rational>;

struct TransgressionTerms {
  /// Q(a, b1, b2, b3)
  Tensor3 four_form_part;
  /// (1/vol) sum_cycl P(a, b1) P(b2, b3); zero for punctured data.
  Tensor3 cyclic_part;
  /// four_form_part - cyclic_part
  Tensor3 total;
};

/// Compact: T(a) = Q(a,.,.,.) - (1/vol) sum_cycl P(a,.)P(.,.).
/// Punctured: T(a) = Q(a,.,.,.), defined only for a in Ker B (DomainError otherwise).
TransgressionTerms transgression_terms(const CohomologyData& data, const RationalVector& a);
Tensor3 transgression(const CohomologyData& data, const RationalVector& a);

std::vector<RationalVector> ker_b(const CohomologyData& data);
/// For punctured data the kernel is taken inside Ker B.
std::vector<RationalVector> ker_t(const CohomologyData& data);

enum class Algebra2 { PoissonCompact, Poisson, Ham, Sp };
enum class Algebra1 { PoissonCompactZero, PoissonCompact, Poisson, Ham };

struct ReportComponent {
  std::string label;
  int dim = 0;
  /// Kernel bases in H^1 coordinates; unit vectors for H^1 components; empty otherwise.
  std::vector<RationalVector> basis;
};

struct H2Report {
  Algebra2 algebra;
  int total_dim = 0;
  std::vector<ReportComponent> components;
};

struct H1Report {
  Algebra1 algebra;
  int dim = 0;
};

H2Report h2(const CohomologyData& data, Algebra2 algebra);
H1Report h1(const CohomologyData& data, Algebra1 algebra);
/// Dimension of the centre of the universal central extension of ham(X).
int center_dim(const CohomologyData& data);

std::string_view algebra_name(Algebra2 a);
std::string_view algebra_name(Algebra1 a);

}  // namespace symcoh
