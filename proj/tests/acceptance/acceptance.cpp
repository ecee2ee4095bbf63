// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symcoh/catalog.hpp"
#include "symcoh/classification.hpp"
#include "symcoh/verify.hpp"

using namespace symcoh;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(std::ostream&)>& body) {
  std::ostringstream why;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(why);
  } catch (const std::exception& e) {
    why << "exception: " << e.what() << "; ";
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const bool ok = why.str().empty();
  failures += !ok;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << ms << " ms)";
  if (!ok) std::cout << " -- " << why.str();
  std::cout << std::endl;
}

template <class T, class U>
void expect_eq(std::ostream& why, const std::string& what, const T& got, const U& want) {
  if (!(got == want)) why << what << " = " << got << ", expected " << want << "; ";
}

void expect(std::ostream& why, const std::string& what, bool ok) {
  if (!ok) why << what << " does not hold; ";
}

RationalVector unit(int b1, int i) {
  RationalVector v(b1);
  v[i] = Rational(1);
  return v;
}

bool all_zero(const std::vector<Rational>& t) {
  for (const auto& x : t) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string dims_str(const H2Report& r) {
  std::string out;
  for (const auto& c : r.components) out += (out.empty() ? "" : "+") + std::to_string(c.dim);
  return out;
}

/// Every (check, context) pair must be present with `cases` cases and no failures.
void expect_checks(std::ostream& why, const SuiteResult& result, const std::vector<std::string>& names,
                   const std::vector<std::string>& contexts, int cases) {
  for (const auto& name : names) {
    for (const auto& ctx : contexts) {
      const CheckResult* found = nullptr;
      for (const auto& c : result.checks) {
        if (c.name == name && c.context == ctx) found = &c;
      }
      if (!found) {
        why << name << " [" << ctx << "] missing; ";
      } else if (found->failures != 0 || found->cases < cases) {
        why << name << " [" << ctx << "] " << found->failures << "/" << found->cases << " failed: "
            << found->first_failure << "; ";
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::string> charts = {"2n=2", "2n=4"};

  criterion(1, "Thurston nilmanifold betti, pairing and H2(sp)", [](std::ostream& why) {
    const CEModel m = thurston_model();
    const auto b = betti_numbers(m);
    expect(why, "betti = (1,3,4,3,1)", b == std::vector<int>{1, 3, 4, 3, 1});
    const CohomologyData d = from_ce_model(m);
    expect(why, "H1 basis (x*, p*, z*)", d.labels == std::vector<std::string>{"x*", "p*", "z*"});
    if (d.b1 != 3) return;
    expect_eq(why, "P(x*,p*)", d.pairing(0, 1), Rational(0));
    expect_eq(why, "P(x*,z*)", d.pairing(0, 2), Rational(0));
    expect_eq(why, "P(z*,p*)", d.pairing(2, 1), Rational(1));
    const H2Report sp = h2(d, Algebra2::Sp);
    expect_eq(why, "h2(sp)", sp.total_dim, 6);
    expect_eq(why, "h2(sp) components", dims_str(sp), std::string("3+3"));
  });

  criterion(2, "punctured Thurston Ker B, H2(sp), H2(ham), H2(poisson), centre", [](std::ostream& why) {
    const CohomologyData d = catalog_data("punctured-thurston");
    const auto kb = ker_b(d);
    expect(why, "Ker B = span{x*}", kb.size() == 1 && kb[0] == unit(3, 0));
    const H2Report sp = h2(d, Algebra2::Sp);
    expect_eq(why, "h2(sp)", sp.total_dim, 5);
    expect_eq(why, "h2(sp) components", dims_str(sp), std::string("3+1+1"));
    expect_eq(why, "h2(ham)", h2(d, Algebra2::Ham).total_dim, 4);
    expect_eq(why, "h2(poisson)", h2(d, Algebra2::Poisson).total_dim, 3);
    expect_eq(why, "center_dim", center_dim(d), 4);
  });

  criterion(3, "T^4 transgression cancels between nonzero terms; H2(sp) = 10", [](std::ostream& why) {
    const CohomologyData d = catalog_data("torus(2)");
    bool q_nonzero = false, cyclic_nonzero = false;
    for (int i = 0; i < d.b1; ++i) {
      const auto t = transgression_terms(d, unit(d.b1, i));
      expect(why, "T(e" + std::to_string(i + 1) + ") = 0", all_zero(t.total));
      q_nonzero |= !all_zero(t.four_form_part);
      cyclic_nonzero |= !all_zero(t.cyclic_part);
    }
    expect(why, "Q term nonzero", q_nonzero);
    expect(why, "cyclic P.P term nonzero", cyclic_nonzero);
    expect_eq(why, "h2(sp)", h2(d, Algebra2::Sp).total_dim, 10);
  });

  criterion(4, "surfaces: H2(sp) of genus 0..3 and Ker T", [](std::ostream& why) {
    expect_eq(why, "sphere h2(sp)", h2(sphere_data(), Algebra2::Sp).total_dim, 0);
    expect_eq(why, "surface(1) h2(sp)", h2(surface_data(1), Algebra2::Sp).total_dim, 3);
    expect_eq(why, "surface(2) h2(sp)", h2(surface_data(2), Algebra2::Sp).total_dim, 6);
    expect_eq(why, "surface(3) h2(sp)", h2(surface_data(3), Algebra2::Sp).total_dim, 15);
    expect(why, "surface(2) Ker T = 0", ker_t(surface_data(2)).empty());
    expect(why, "surface(3) Ker T = 0", ker_t(surface_data(3)).empty());
  });

  criterion(5, "Darboux star/delta identities, *^2 = Id, canonical Betti duality", [&](std::ostream& why) {
    const SuiteResult r = run_suite(Suite::Brylinski, VerifyOptions{});
    expect_checks(why, r,
                  {"star-formula", "delta-k1", "delta-k2", "delta-pi", "cyclic-4term", "commutator-exact",
                   "closed-alpha-exactness", "star-involution"},
                  charts, 200);
    std::vector<std::string> models;
    for (const auto& e : catalog_entries()) {
      if (!e.punctured && e.ce_model) models.push_back(e.name);
    }
    expect_checks(why, r, {"star-involution", "canonical-betti"}, models, 1);
    expect(why, "suite ok", r.ok());
  });

  criterion(6, "bracket antisymmetry, Jacobi and delta of bracket", [&](std::ostream& why) {
    const SuiteResult r = run_suite(Suite::Bracket, VerifyOptions{});
    expect_checks(why, r, {"bracket-antisym", "bracket-jacobi", "delta-of-bracket"}, charts, 200);
    expect(why, "suite ok", r.ok());
  });

  criterion(7, "cocycles on T^2 and T^4: closedness, KS triviality, exact collapse, L_v identity",
            [&](std::ostream& why) {
              const SuiteResult r = run_suite(Suite::Cocycle, VerifyOptions{});
              expect_checks(why, r,
                            {"roger-cocycle", "ks-cocycle", "singular-cocycle", "ks-triviality",
                             "exact-roger-collapse", "lie-derivative-identity"},
                            charts, 100);
              expect(why, "suite ok", r.ok());
            });

  criterion(8, "puncturing adds one to H2(ham); b1 < 4 forces T = 0", [](std::ostream& why) {
    for (const auto& e : catalog_entries()) {
      const CohomologyData d = catalog_data(e.name);
      const int ham = h2(d, Algebra2::Ham).total_dim;
      const int poisson = h2(d, Algebra2::Poisson).total_dim;
      expect_eq(why, e.name + " h2(ham) - h2(poisson)", ham - poisson, d.compact() ? 0 : 1);
      if (d.compact() && d.b1 < 4) {
        for (int i = 0; i < d.b1; ++i) {
          expect(why, e.name + " T(e" + std::to_string(i + 1) + ") = 0", all_zero(transgression(d, unit(d.b1, i))));
        }
      }
    }
  });

  return failures;
}
