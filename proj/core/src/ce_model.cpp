#include "symcoh/ce_model.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace symcoh {

namespace {

void check_context(const CEModel& model, const RForm& a) {
  if (a.generators() != model.dimension()) {
    throw ContextError("form over " + std::to_string(a.generators()) + " generators used with model '" +
                       model.name + "' of dimension " + std::to_string(model.dimension()));
  }
}

// d(e_I) for a basis monomial, by peeling the lowest generator:
// d(e_i ^ rest) = d(e_i) ^ rest - e_i ^ d(rest).
RForm d_monomial(const CEModel& model, MultiIndex idx) {
  const int g = model.dimension();
  if (idx.empty()) return RForm(g);
  const int first = idx.positions().front();
  const MultiIndex rest = idx.without(first);
  const RForm rest_form = RForm::monomial(g, rest);
  RForm out = wedge(model.differential[first], rest_form);
  out -= wedge(RForm::generator(g, first), d_monomial(model, rest));
  return out;
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  for (const auto& v : violations) os << v.invariant << ": " << v.witness << "\n";
  return os.str();
}

RForm d_ce(const CEModel& model, const RForm& a) {
  check_context(model, a);
  RForm out(model.dimension());
  for (const auto& [idx, c] : a.terms()) out += d_monomial(model, idx) * c;
  return out;
}

RForm model_liouville(const CEModel& model) {
  const int n = model.half_dimension();
  RForm top = wedge_power(model.omega, n);
  return top * (Rational(1) / factorial(n));
}

Rational volume(const CEModel& model) {
  return model_liouville(model).coefficient_of(model.orientation());
}

ValidationReport validate(const CEModel& model) {
  ValidationReport report;
  const int g = model.dimension();
  auto fail = [&](std::string inv, std::string witness) {
    report.violations.push_back({std::move(inv), std::move(witness)});
  };

  if (g == 0 || g % 2 != 0) {
    fail("even dimension", "generator count " + std::to_string(g));
    return report;
  }
  if (g > MultiIndex::kMaxGenerators) {
    fail("generator count", std::to_string(g) + " exceeds " + std::to_string(MultiIndex::kMaxGenerators));
    return report;
  }
  if (static_cast<int>(model.differential.size()) != g) {
    fail("differential table", "expected one entry per generator");
    return report;
  }
  for (int i = 0; i < g; ++i) {
    const RForm& di = model.differential[i];
    if (di.generators() != g || !di.is_homogeneous(2)) {
      fail("differential table", "d(" + model.generators[i] + ") is not a degree-2 form over the generators");
      return report;
    }
  }
  if (model.omega.generators() != g || !model.omega.is_homogeneous(2)) {
    fail("symplectic form", "omega is not a degree-2 form over the generators");
    return report;
  }

  for (int i = 0; i < g; ++i) {
    const RForm dd = d_ce(model, model.differential[i]);
    if (!dd.is_zero()) {
      fail("d^2 = 0", "d(d(" + model.generators[i] + ")) = " + to_string(dd, model.generators));
    }
  }
  const RForm domega = d_ce(model, model.omega);
  if (!domega.is_zero()) fail("closed", "d(omega) = " + to_string(domega, model.generators));

  const Rational vol = volume(model);
  if (vol.is_zero()) {
    fail("nondegeneracy", "omega^n/n! = 0");
  } else if (vol.sign() < 0) {
    fail("orientation", "Liouville coefficient " + vol.str() + " is negative in the declared generator order");
  } else if (model.declared_volume && *model.declared_volume != vol) {
    fail("volume", "declared vol " + model.declared_volume->str() + " differs from Liouville coefficient " +
                       vol.str());
  }
  return report;
}

void require_valid(const CEModel& model) {
  const ValidationReport r = validate(model);
  if (!r.ok()) {
    throw InvariantError("model '" + model.name + "' violates " + r.violations.front().invariant + " (" +
                         r.violations.front().witness + ")");
  }
}

std::vector<MultiIndex> basis_of_degree(int generators, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > generators) return out;
  const std::uint32_t limit = generators >= 32 ? 0u : (1u << generators);
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    if (std::popcount(bits) == k) out.push_back(MultiIndex::from_bits(bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalMatrix d_matrix(const CEModel& model, int k) {
  const int g = model.dimension();
  const auto src = basis_of_degree(g, k);
  const auto dst = basis_of_degree(g, k + 1);
  RationalMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const RForm image = d_monomial(model, src[c]);
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = image.coefficient_of(dst[r]);
  }
  return m;
}

int betti(const CEModel& model, int k) {
  const int g = model.dimension();
  if (k < 0 || k > g) throw DomainError("degree out of range for betti");
  const auto dim = static_cast<int>(basis_of_degree(g, k).size());
  const int rank_out = k < g ? static_cast<int>(rank(d_matrix(model, k))) : 0;
  const int rank_in = k > 0 ? static_cast<int>(rank(d_matrix(model, k - 1))) : 0;
  return dim - rank_out - rank_in;
}

std::vector<int> betti_numbers(const CEModel& model) {
  std::vector<int> out;
  for (int k = 0; k <= model.dimension(); ++k) out.push_back(betti(model, k));
  return out;
}

std::vector<RForm> h1_basis(const CEModel& model) {
  const int g = model.dimension();
  const auto kernel = nullspace(d_matrix(model, 1));
  std::vector<RForm> out;
  for (const auto& v : kernel) {
    RForm f(g);
    for (int i = 0; i < g; ++i) f.add_term(MultiIndex::single(i), v[i]);
    out.push_back(std::move(f));
  }
  return out;
}

CEModel torus_model(int n) {
  if (n < 1 || n > 3) throw DomainError("catalog torus models exist for n = 1, 2, 3");
  CEModel m;
  m.name = "torus(" + std::to_string(n) + ")";
  const int g = 2 * n;
  for (int i = 0; i < g; ++i) {
    m.generators.push_back("e" + std::to_string(i + 1));
    m.differential.emplace_back(g);
  }
  m.omega = RForm(g);
  for (int i = 0; i < n; ++i) m.omega.add_term(MultiIndex::of({2 * i, 2 * i + 1}), Rational(1));
  return m;
}

CEModel thurston_model() {
  CEModel m;
  m.name = "thurston";
  m.generators = {"x*", "p*", "z*", "h*"};
  constexpr int x = 0, p = 1, z = 2, h = 3;
  const int g = 4;
  for (int i = 0; i < g; ++i) m.differential.emplace_back(g);
  // dh* = -x* ^ p*
  m.differential[h].add_term(MultiIndex::of({x, p}), Rational(-1));
  // omega = h* ^ x* + z* ^ p*
  m.omega = wedge(RForm::generator(g, h), RForm::generator(g, x)) +
            wedge(RForm::generator(g, z), RForm::generator(g, p));
  return m;
}

}  // namespace symcoh
