#include "symcoh/verify.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "symcoh/error.hpp"
#include "symcoh/torus.hpp"

namespace symcoh {

bool SuiteResult::ok() const {
  for (const auto& c : checks) {
    if (c.failures != 0) return false;
  }
  return true;
}

Suite suite_from_name(std::string_view name) {
  if (name == "brylinski") return Suite::Brylinski;
  if (name == "bracket") return Suite::Bracket;
  if (name == "cocycle") return Suite::Cocycle;
  if (name == "all") return Suite::All;
  throw UnknownNameError("unknown suite '" + std::string(name) + "' (brylinski, bracket, cocycle, all)");
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Returns a description of the failure, or nothing when the case passes.
using CaseFn = std::function<std::optional<std::string>(Rng&, int)>;

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : options_(options) {}

  void run(const std::string& name, const std::string& context, int cases, const CaseFn& fn) {
    CheckResult r;
    r.name = name;
    r.context = context;
    for (int i = 0; i < cases; ++i) {
      const std::uint64_t seed = case_seed(options_.seed, name, context, i);
      Rng rng(seed);
      auto failure = fn(rng, i);
      ++r.cases;
      if (failure) {
        if (r.failures == 0) {
          r.first_failure = *failure;
          r.first_failure_seed = seed;
        }
        ++r.failures;
      }
    }
    result_.checks.push_back(std::move(r));
  }

  int cases() const { return options_.cases; }
  SuiteResult take() { return std::move(result_); }

 private:
  const VerifyOptions& options_;
  SuiteResult result_;
};

std::string context_of(int dim) { return "2n=" + std::to_string(dim); }

std::string poly_form_str(const DarbouxChart& chart, const PolyForm& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str(chart.names()) + ")";
    for (int p : idx.positions()) out += "*d" + chart.names()[p];
  }
  return out;
}

std::optional<std::string> nonzero(const DarbouxChart& chart, const std::string& inputs, const PolyForm& defect) {
  if (defect.is_zero()) return std::nullopt;
  return inputs + "; defect = " + poly_form_str(chart, defect);
}

void identity_checks(Runner& run, const DarbouxChart& chart, std::initializer_list<Identity> ids) {
  const std::string ctx = context_of(chart.dimension());
  for (Identity id : ids) {
    run.run(std::string(identity_name(id)), ctx, run.cases(), [&](Rng& rng, int) {
      IdentityCase c = verify_identity(chart, id, rng);
      return nonzero(chart, c.inputs, c.defect);
    });
  }
}

RForm random_rational_form(Rng& rng, int generators, int k) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  RForm out(generators);
  for (MultiIndex idx : basis_of_degree(generators, k)) out.add_term(idx, Rational(coeff(rng)));
  return out;
}

void brylinski(Runner& run, const VerifyOptions& options) {
  for (int dim : options.dims) {
    const DarbouxChart chart(dim / 2);
    const std::string ctx = context_of(dim);
    identity_checks(run, chart,
                    {Identity::StarFormula, Identity::DeltaK1, Identity::DeltaK2, Identity::DeltaPi,
                     Identity::Cyclic4Term, Identity::CommutatorExact, Identity::ClosedAlphaExactness});
    run.run("star-involution", ctx, run.cases(), [&](Rng& rng, int) {
      const int k = std::uniform_int_distribution<int>(0, dim)(rng);
      const PolyForm a = random_form(rng, chart, k);
      return nonzero(chart, "a = " + poly_form_str(chart, a), star(chart, star(chart, a)) - a);
    });
    run.run("delta-squared", ctx, run.cases(), [&](Rng& rng, int) {
      const int k = std::uniform_int_distribution<int>(0, dim)(rng);
      const PolyForm a = random_form(rng, chart, k);
      return nonzero(chart, "a = " + poly_form_str(chart, a), delta(chart, delta(chart, a)));
    });
    run.run("exact-in-delta-image", ctx, run.cases(), [&](Rng& rng, int) {
      const Polynomial f = random_polynomial(rng, dim);
      return nonzero(chart, "f = " + f.str(chart.names()), primitive_defect(chart, f, kPrimitiveSign));
    });
  }
  for (const CEModel& model : {torus_model(1), torus_model(2), torus_model(3), thurston_model()}) {
    const SymplecticContext ctx(model.omega);
    run.run("star-involution", model.name, run.cases(), [&](Rng& rng, int) -> std::optional<std::string> {
      const int k = std::uniform_int_distribution<int>(0, model.dimension())(rng);
      const RForm a = random_rational_form(rng, model.dimension(), k);
      const RForm defect = hodge_star(ctx, hodge_star(ctx, a)) - a;
      if (defect.is_zero()) return std::nullopt;
      return "a = " + to_string(a, model.generators) + "; defect = " + to_string(defect, model.generators);
    });
    const int dim = model.dimension();
    run.run("canonical-betti", model.name, dim + 1, [&](Rng&, int k) -> std::optional<std::string> {
      const int can = canonical_betti(model, dim - k);
      const int dr = betti(model, k);
      if (can == dr) return std::nullopt;
      return "k = " + std::to_string(k) + ": canonical " + std::to_string(can) + " vs de Rham " + std::to_string(dr);
    });
  }
}

void bracket(Runner& run, const VerifyOptions& options) {
  for (int dim : options.dims) {
    const DarbouxChart chart(dim / 2);
    const std::string ctx = context_of(dim);
    identity_checks(run, chart, {Identity::BracketAntisym, Identity::BracketJacobi});
    run.run("delta-of-bracket", ctx, run.cases(), [&](Rng& rng, int) {
      const PolyForm a = random_form(rng, chart, 1);
      const PolyForm b = random_form(rng, chart, 1);
      const Polynomial da = delta(chart, a).coefficient_of(MultiIndex{});
      const Polynomial db = delta(chart, b).coefficient_of(MultiIndex{});
      return nonzero(chart, "alpha = " + poly_form_str(chart, a) + "; beta = " + poly_form_str(chart, b),
                     delta(chart, ext_bracket(chart, a, b)) - chart.function(poisson(chart, da, db)));
    });
    run.run("poisson-jacobi", ctx, run.cases(), [&](Rng& rng, int) {
      const Polynomial f = random_polynomial(rng, dim);
      const Polynomial g = random_polynomial(rng, dim);
      const Polynomial h = random_polynomial(rng, dim);
      const Polynomial j = poisson(chart, f, poisson(chart, g, h)) + poisson(chart, g, poisson(chart, h, f)) +
                           poisson(chart, h, poisson(chart, f, g));
      return nonzero(chart, "f = " + f.str(chart.names()) + "; g = " + g.str(chart.names()) +
                                "; h = " + h.str(chart.names()),
                     chart.function(j));
    });
    run.run("hamiltonian-homomorphism", ctx, run.cases(), [&](Rng& rng, int) -> std::optional<std::string> {
      const Polynomial f = random_polynomial(rng, dim);
      const Polynomial g = random_polynomial(rng, dim);
      const PolyVectorField lhs = ham_vf(chart, poisson(chart, f, g));
      const PolyVectorField rhs = lie_bracket(ham_vf(chart, f), ham_vf(chart, g));
      if (lhs == rhs) return std::nullopt;
      return "f = " + f.str(chart.names()) + "; g = " + g.str(chart.names()) + "; X_{f,g} != [X_f, X_g]";
    });
  }
}

std::string trig_inputs(std::initializer_list<std::pair<const char*, const TrigFunction*>> fs, int dims) {
  std::string out;
  for (const auto& [label, f] : fs) {
    if (!out.empty()) out += "; ";
    out += std::string(label) + " = " + f->str(dims);
  }
  return out;
}

template <class V>
std::optional<std::string> unless_zero(const V& defect, const std::string& inputs) {
  if (defect.is_zero()) return std::nullopt;
  std::ostringstream os;
  os << inputs << "; defect = " << defect;
  return os.str();
}

std::string one_form_str(const ConstantOneForm& a) {
  std::string out = "alpha = (";
  for (std::size_t i = 0; i < a.components.size(); ++i) out += (i ? ", " : "") + a.components[i].str();
  return out + ")";
}

void cocycle(Runner& run, const VerifyOptions& options) {
  for (int dim : options.dims) {
    const Torus t(dim / 2);
    const std::string ctx = context_of(dim);
    // Five closed 1-forms per dimension, fixed by the seed.
    std::vector<ConstantOneForm> alphas;
    {
      Rng rng(case_seed(options.seed, "roger-alphas", ctx, 0));
      while (alphas.size() < 5) {
        ConstantOneForm a = random_constant_one_form(rng, dim);
        bool zero = true;
        for (const auto& c : a.components) zero = zero && c.is_zero();
        if (!zero) alphas.push_back(std::move(a));
      }
    }
    run.run("roger-cocycle", ctx, run.cases(), [&](Rng& rng, int) -> std::optional<std::string> {
      const TrigFunction f = random_trig(rng, dim), g = random_trig(rng, dim), h = random_trig(rng, dim);
      for (const auto& a : alphas) {
        const auto psi = [&](const TrigFunction& x, const TrigFunction& y) { return roger_cocycle(t, a, x, y); };
        const TauValue d = cocycle_defect<TauValue>(t, psi, f, g, h);
        if (!d.is_zero()) return unless_zero(d, one_form_str(a) + "; " + trig_inputs({{"f", &f}, {"g", &g}, {"h", &h}}, dim));
      }
      return std::nullopt;
    });
    run.run("ks-cocycle", ctx, run.cases(), [&](Rng& rng, int) {
      const TrigFunction f = random_trig(rng, dim), g = random_trig(rng, dim), h = random_trig(rng, dim);
      const auto psi = [&](const TrigFunction& x, const TrigFunction& y) { return ks_cocycle(t, x, y); };
      return unless_zero(cocycle_defect<Rational>(t, psi, f, g, h), trig_inputs({{"f", &f}, {"g", &g}, {"h", &h}}, dim));
    });
    run.run("singular-cocycle", ctx, run.cases(), [&](Rng& rng, int) -> std::optional<std::string> {
      const TrigFunction f = random_trig(rng, dim), g = random_trig(rng, dim), h = random_trig(rng, dim);
      // Slices {q1 = c} and {p1 = c}, c in {0, tau/2}.
      for (int j : {0, dim / 2}) {
        for (const Rational& c : {Rational(0), Rational(1, 2)}) {
          const auto psi = [&](const TrigFunction& x, const TrigFunction& y) {
            return singular_cocycle(t, j, c, x, y);
          };
          const TauValue d = cocycle_defect<TauValue>(t, psi, f, g, h);
          if (!d.is_zero()) {
            return unless_zero(d, "slice theta" + std::to_string(j + 1) + " = " + c.str() + "*tau; " +
                                      trig_inputs({{"f", &f}, {"g", &g}, {"h", &h}}, dim));
          }
        }
      }
      return std::nullopt;
    });
    run.run("ks-triviality", ctx, run.cases(), [&](Rng& rng, int) {
      const TrigFunction f = random_trig(rng, dim), g = random_trig(rng, dim);
      const auto chi = [&](const TrigFunction& x) { return ks_primitive(t, x); };
      const Rational d = ks_cocycle(t, f, g) + Rational(kKsTrivialSign) * coboundary<Rational>(t, chi, f, g);
      return unless_zero(d, trig_inputs({{"f", &f}, {"g", &g}}, dim));
    });
    run.run("exact-roger-collapse", ctx, run.cases(), [&](Rng& rng, int) {
      const TrigFunction h = random_trig(rng, dim), f = random_trig(rng, dim), g = random_trig(rng, dim);
      const auto chi = [&](const TrigFunction& x) { return exact_roger_primitive(t, h, x); };
      const TauValue d = roger_cocycle(t, exact_one_form(t, h), f, g) -
                         character(t, h) * TauValue(ks_cocycle(t, f, g), 0) - coboundary<TauValue>(t, chi, f, g);
      return unless_zero(d, trig_inputs({{"h", &h}, {"f", &f}, {"g", &g}}, dim));
    });
    run.run("lie-derivative-identity", ctx, run.cases(), [&](Rng& rng, int) -> std::optional<std::string> {
      ConstantOneForm a = random_constant_one_form(rng, dim);
      const TrigOneForm alpha = to_trig(a);
      const TrigFunction f = random_trig(rng, dim), g = random_trig(rng, dim);
      for (int mu = 0; mu < dim; ++mu) {
        std::vector<Rational> v(dim);
        v[mu] = Rational(1);
        const auto theta = [&](const TrigFunction& x) { return theta_cochain(t, alpha, v, x); };
        const TauValue mean_alpha_v = TauValue(a.components[mu], dim);
        const TauValue d = coboundary<TauValue>(t, theta, f, g) - mean_alpha_v * TauValue(ks_cocycle(t, f, g), 0) -
                           lie_derivative_roger(t, alpha, v, f, g);
        if (!d.is_zero()) {
          return unless_zero(d, "v = d/dtheta" + std::to_string(mu + 1) + "; " + one_form_str(a) + "; " +
                                    trig_inputs({{"f", &f}, {"g", &g}}, dim));
        }
      }
      return std::nullopt;
    });
    run.run("bracket-mean-zero", ctx, run.cases(), [&](Rng& rng, int) {
      const TrigFunction f = random_trig(rng, dim), g = random_trig(rng, dim);
      return unless_zero(normalized_character(t, tbracket(t, f, g)), trig_inputs({{"f", &f}, {"g", &g}}, dim));
    });
  }
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::string_view check, std::string_view context, int index) {
  std::uint64_t x = splitmix(seed);
  x = splitmix(x ^ fnv1a(check));
  x = splitmix(x ^ fnv1a(context));
  return splitmix(x ^ static_cast<std::uint64_t>(index));
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("SYMCOH_SEED");
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t used = 0;
    const std::string s(v);
    const std::uint64_t seed = std::stoull(s, &used, 0);
    if (used != s.size()) throw ParseError("");
    return seed;
  } catch (const std::exception&) {
    throw ParseError("SYMCOH_SEED must be an unsigned integer, got '" + std::string(v) + "'");
  }
}

SuiteResult run_suite(Suite suite, const VerifyOptions& options) {
  for (int d : options.dims) {
    if (d != 2 && d != 4) throw DomainError("verification dimensions must be 2 or 4");
  }
  if (options.cases < 1) throw DomainError("need at least one case per check");
  Runner run(options);
  if (suite == Suite::Brylinski || suite == Suite::All) brylinski(run, options);
  if (suite == Suite::Bracket || suite == Suite::All) bracket(run, options);
  if (suite == Suite::Cocycle || suite == Suite::All) cocycle(run, options);
  return run.take();
}

std::string format_result(const SuiteResult& result) {
  std::ostringstream os;
  std::size_t name_w = 0;
  std::size_t ctx_w = 0;
  for (const auto& c : result.checks) {
    name_w = std::max(name_w, c.name.size());
    ctx_w = std::max(ctx_w, c.context.size());
  }
  int failed = 0;
  for (const auto& c : result.checks) {
    os << (c.failures == 0 ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(name_w)) << c.name << "  "
       << std::setw(static_cast<int>(ctx_w)) << c.context << std::right << "  " << (c.cases - c.failures) << "/"
       << c.cases << "\n";
    if (c.failures != 0) {
      ++failed;
      os << "      first failure (case seed 0x" << std::hex << c.first_failure_seed << std::dec
         << "): " << c.first_failure << "\n";
    }
  }
  if (failed == 0) {
    os << "all " << result.checks.size() << " checks passed\n";
  } else {
    os << failed << " of " << result.checks.size() << " checks failed\n";
  }
  return os.str();
}

std::string to_json(const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["ok"] = result.ok();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : result.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["context"] = c.context;
    e["cases"] = c.cases;
    e["failures"] = c.failures;
    if (c.failures != 0) {
      e["first_failure"] = c.first_failure;
      e["first_failure_seed"] = c.first_failure_seed;
    }
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace symcoh
