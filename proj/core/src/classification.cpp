#include "symcoh/classification.hpp"

#include <bit>

#include "symcoh/error.hpp"
#include "symcoh/symplectic.hpp"

namespace symcoh {

namespace {

int binomial2(int n) { return n * (n - 1) / 2; }

std::vector<RationalVector> unit_vectors(int n) {
  std::vector<RationalVector> out;
  for (int i = 0; i < n; ++i) {
    RationalVector v(n);
    v[i] = Rational(1);
    out.push_back(std::move(v));
  }
  return out;
}

void check_alternating_matrix(const RationalMatrix& m, int b1, const char* what) {
  if (m.rows() != static_cast<std::size_t>(b1) || m.cols() != static_cast<std::size_t>(b1)) {
    throw InvariantError(std::string(what) + " must be b1 x b1");
  }
  for (int i = 0; i < b1; ++i) {
    for (int j = 0; j < b1; ++j) {
      if (m(i, j) != -m(j, i)) {
        throw InvariantError(std::string(what) + " is not antisymmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
      }
    }
  }
}

}  // namespace

void validate(const CohomologyData& data) {
  const int b = data.b1;
  if (b < 0) throw InvariantError("b1 must be nonnegative");
  if (data.vol.sign() <= 0) throw InvariantError("vol must be positive");
  if (data.b_top_minus_1 < 0) throw InvariantError("b_{2n-1} must be nonnegative");
  if (data.labels.size() != static_cast<std::size_t>(b)) throw InvariantError("need one label per H^1 basis vector");
  check_alternating_matrix(data.pairing, b, "pairing P");
  if (data.independent_b) check_alternating_matrix(*data.independent_b, b, "form B");
  if (data.four_form.size() != static_cast<std::size_t>(b) * b * b * b) {
    throw InvariantError("four-form Q must have b1^4 entries");
  }
  // Alternating: antisymmetric under each adjacent transposition.
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      for (int k = 0; k < b; ++k) {
        for (int l = 0; l < b; ++l) {
          const Rational& v = data.q(i, j, k, l);
          if (v != -data.q(j, i, k, l) || v != -data.q(i, k, j, l) || v != -data.q(i, j, l, k)) {
            throw InvariantError("four-form Q is not alternating at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                 std::to_string(l + 1) + ")");
          }
        }
      }
    }
  }
}

CohomologyData from_ce_model(const CEModel& model) {
  require_valid(model);
  const SymplecticContext ctx(model.omega);
  const int n = model.half_dimension();
  const MultiIndex mu = model.orientation();
  const std::vector<RForm> basis = h1_basis(model);
  const int b = static_cast<int>(basis.size());

  CohomologyData data;
  data.name = model.name;
  data.b1 = b;
  for (const auto& a : basis) data.labels.push_back(to_string(a, model.generators));
  data.vol = volume(model);
  data.compactness = Compactness::Compact;
  data.b_top_minus_1 = betti(model, 2 * n - 1);

  const RForm w1 = ctx.omega_power(n - 1);
  const RForm w2 = ctx.omega_power(n - 2);
  data.pairing = RationalMatrix(b, b);
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) data.pairing(i, j) = wedge(wedge(basis[i], basis[j]), w1).coefficient_of(mu);
  }
  data.four_form.assign(static_cast<std::size_t>(b) * b * b * b, Rational(0));
  if (!w2.is_zero()) {
    for (int i = 0; i < b; ++i) {
      for (int j = 0; j < b; ++j) {
        const RForm ij = wedge(basis[i], basis[j]);
        if (ij.is_zero()) continue;
        for (int k = 0; k < b; ++k) {
          const RForm ijk = wedge(ij, basis[k]);
          if (ijk.is_zero()) continue;
          for (int l = 0; l < b; ++l) {
            data.four_form[((static_cast<std::size_t>(i) * b + j) * b + k) * b + l] =
                wedge(wedge(ijk, basis[l]), w2).coefficient_of(mu);
          }
        }
      }
    }
  }
  validate(data);
  return data;
}

CohomologyData direct_data(CohomologyData data) {
  validate(data);
  return data;
}

CohomologyData sphere_data() {
  CohomologyData data;
  data.name = "sphere";
  data.pairing = RationalMatrix(0, 0);
  return direct_data(std::move(data));
}

CohomologyData surface_data(int g) {
  if (g < 1) throw DomainError("surface genus must be >= 1 (use sphere for genus 0)");
  CohomologyData data;
  data.name = "surface(" + std::to_string(g) + ")";
  data.b1 = 2 * g;
  data.b_top_minus_1 = 2 * g;
  for (int i = 1; i <= g; ++i) {
    data.labels.push_back("a" + std::to_string(i));
    data.labels.push_back("b" + std::to_string(i));
  }
  data.pairing = RationalMatrix(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    data.pairing(2 * i, 2 * i + 1) = Rational(1);
    data.pairing(2 * i + 1, 2 * i) = Rational(-1);
  }
  data.four_form.assign(static_cast<std::size_t>(data.b1) * data.b1 * data.b1 * data.b1, Rational(0));
  return direct_data(std::move(data));
}

CohomologyData torus_direct(int n) {
  if (n < 1 || n > 3) throw DomainError("torus_direct needs n in 1..3");
  const int b = 2 * n;
  CohomologyData data;
  data.name = "torus(" + std::to_string(n) + ")";
  data.b1 = b;
  data.b_top_minus_1 = b;
  for (int i = 1; i <= b; ++i) data.labels.push_back("e" + std::to_string(i));
  data.pairing = RationalMatrix(b, b);
  for (int i = 0; i < n; ++i) {
    data.pairing(2 * i, 2 * i + 1) = Rational(1);
    data.pairing(2 * i + 1, 2 * i) = Rational(-1);
  }
  data.four_form.assign(static_cast<std::size_t>(b) * b * b * b, Rational(0));
  if (n >= 2) {
    // Nonzero exactly when {i,j,k,l} is a union of two pairs {2m, 2m+1}.
    for (int i = 0; i < b; ++i) {
      for (int j = 0; j < b; ++j) {
        for (int k = 0; k < b; ++k) {
          for (int l = 0; l < b; ++l) {
            const int seq[4] = {i, j, k, l};
            const int s = sort_sign(seq);
            if (s == 0) continue;
            int pairs_mask = 0;
            for (int x : seq) pairs_mask |= 1 << (x / 2);
            if (std::popcount(static_cast<unsigned>(pairs_mask)) != 2) continue;
            data.four_form[((static_cast<std::size_t>(i) * b + j) * b + k) * b + l] = Rational(s);
          }
        }
      }
    }
  }
  return direct_data(std::move(data));
}

CohomologyData puncture(const CohomologyData& data) {
  if (!data.compact()) throw DomainError("'" + data.name + "' is already punctured");
  CohomologyData out = data;
  out.name = "punctured-" + data.name;
  out.compactness = Compactness::PuncturedCompact;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool in_span_of_kernel(const RationalMatrix& b, const RationalVector& a) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < b.cols(); ++j) s += b(i, j) * a[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

Rational pair_with(const CohomologyData& data, const RationalVector& a, int j) {
  Rational s;
  for (int m = 0; m < data.b1; ++m) {
    if (!a[m].is_zero()) s += a[m] * data.pairing(m, j);
  }
  return s;
}

}  // namespace

TransgressionTerms transgression_terms(const CohomologyData& data, const RationalVector& a) {
  const int b = data.b1;
  if (a.size() != static_cast<std::size_t>(b)) throw DomainError("transgression argument must have b1 coordinates");
  if (!data.compact() && !in_span_of_kernel(data.b_form(), a)) {
    throw DomainError("transgression on punctured data is defined only on Ker B");
  }
  const std::size_t size = static_cast<std::size_t>(b) * b * b;
  TransgressionTerms t{Tensor3(size), Tensor3(size), Tensor3(size)};
  RationalVector pa(b);
  for (int j = 0; j < b; ++j) pa[j] = pair_with(data, a, j);
  const Rational inv_vol = Rational(1) / data.vol;
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      for (int k = 0; k < b; ++k) {
        const std::size_t at = (static_cast<std::size_t>(i) * b + j) * b + k;
        Rational qa;
        for (int m = 0; m < b; ++m) {
          if (!a[m].is_zero()) qa += a[m] * data.q(m, i, j, k);
        }
        t.four_form_part[at] = qa;
        if (data.compact()) {
          t.cyclic_part[at] = inv_vol * (pa[i] * data.pairing(j, k) + pa[j] * data.pairing(k, i) +
                                         pa[k] * data.pairing(i, j));
        }
        t.total[at] = t.four_form_part[at] - t.cyclic_part[at];
      }
    }
  }
  return t;
}

Tensor3 transgression(const CohomologyData& data, const RationalVector& a) {
  return transgression_terms(data, a).total;
}

std::vector<RationalVector> ker_b(const CohomologyData& data) { return nullspace(data.b_form()); }

std::vector<RationalVector> ker_t(const CohomologyData& data) {
  const int b = data.b1;
  const std::vector<RationalVector> domain = data.compact() ? unit_vectors(b) : ker_b(data);
  if (domain.empty()) return {};
  std::vector<Tensor3> images;
  for (const auto& v : domain) images.push_back(transgression(data, v));
  std::vector<RationalVector> rows;
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      for (int k = j + 1; k < b; ++k) {
        RationalVector row;
        for (const auto& img : images) row.push_back(img[(static_cast<std::size_t>(i) * b + j) * b + k]);
        rows.push_back(std::move(row));
      }
    }
  }
  const auto coeffs = nullspace(RationalMatrix::from_rows(rows, domain.size()));
  std::vector<RationalVector> out;
  for (const auto& c : coeffs) {
    RationalVector v(b);
    for (std::size_t r = 0; r < domain.size(); ++r) {
      if (c[r].is_zero()) continue;
      for (int m = 0; m < b; ++m) v[m] += c[r] * domain[r][m];
    }
    out.push_back(std::move(v));
  }
  return out;
}

H2Report h2(const CohomologyData& data, Algebra2 algebra) {
  validate(data);
  H2Report r{algebra, 0, {}};
  const int b = data.b1;
  switch (algebra) {
    case Algebra2::PoissonCompact:
      r.components.push_back({"H¹_dR", b, unit_vectors(b)});
      break;
    case Algebra2::Poisson:
      // Compactly supported H^1; equal to H^1 for compact X and identified with the
      // parent's H^1 for a punctured one.
      r.components.push_back({"H¹_dR,c", b, unit_vectors(b)});
      break;
    case Algebra2::Ham:
      if (data.compact()) {
        r.components.push_back({"H¹_dR", b, unit_vectors(b)});
      } else {
        r.components.push_back({"H¹_dR,c", b, unit_vectors(b)});
        r.components.push_back({"KS", 1, {}});
      }
      break;
    case Algebra2::Sp: {
      r.components.push_back({"Λ²H¹*", binomial2(b), {}});
      auto kt = ker_t(data);
      const int dim = static_cast<int>(kt.size());
      if (data.compact()) {
        r.components.push_back({"Ker T", dim, std::move(kt)});
      } else {
        r.components.push_back({"KS", 1, {}});
        r.components.push_back({"Ker B ∩ Ker T", dim, std::move(kt)});
      }
      break;
    }
  }
  for (const auto& c : r.components) r.total_dim += c.dim;
  return r;
}

H1Report h1(const CohomologyData& data, Algebra1 algebra) {
  validate(data);
  switch (algebra) {
    case Algebra1::PoissonCompactZero: return {algebra, 0};
    case Algebra1::PoissonCompact: return {algebra, 1};
    case Algebra1::Poisson: return {algebra, data.compact() ? 1 : 0};
    case Algebra1::Ham: return {algebra, 0};
  }
  return {algebra, 0};
}

int center_dim(const CohomologyData& data) {
  validate(data);
  return data.compact() ? data.b_top_minus_1 : data.b_top_minus_1 + 1;
}

std::string_view algebra_name(Algebra2 a) {
  switch (a) {
    case Algebra2::PoissonCompact: return "poisson_c";
    case Algebra2::Poisson: return "poisson";
    case Algebra2::Ham: return "ham";
    case Algebra2::Sp: return "sp";
  }
  return "";
}

std::string_view algebra_name(Algebra1 a) {
  switch (a) {
    case Algebra1::PoissonCompactZero: return "poisson_c0";
    case Algebra1::PoissonCompact: return "poisson_c";
    case Algebra1::Poisson: return "poisson";
    case Algebra1::Ham: return "ham";
  }
  return "";
}

}  // namespace symcoh
