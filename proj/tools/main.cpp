// symcoh: catalog, cohomology reports, randomised identity verification and
// cocycle evaluation.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 invariant or domain violation, 4 unknown model/algebra/suite.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcoh/catalog.hpp"
#include "symcoh/error.hpp"
#include "symcoh/model_io.hpp"
#include "symcoh/report.hpp"
#include "symcoh/torus.hpp"
#include "symcoh/verify.hpp"

namespace fs = std::filesystem;
using namespace symcoh;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kInvariant = 3, kUnknown = 4 };

struct Resolved {
  CohomologyData data;
  std::optional<CEModel> model;
};

bool looks_like_file(const std::string& ref) {
  return ref.ends_with(".json") || ref.find('/') != std::string::npos;
}

Resolved resolve(const std::string& ref, const std::string& models_dir) {
  if (looks_like_file(ref)) {
    CEModel m = load_model_file(ref);
    return {from_ce_model(m), m};
  }
  if (!models_dir.empty()) {
    const fs::path candidate = fs::path(models_dir) / (ref + ".json");
    if (fs::exists(candidate)) {
      CEModel m = load_model_file(candidate);
      return {from_ce_model(m), m};
    }
  }
  return {catalog_data(ref), catalog_model(ref)};
}

int cmd_catalog(bool json, const std::string& models_dir) {
  struct Row {
    std::string name, kind, description;
  };
  std::vector<Row> rows;
  for (const auto& e : catalog_entries()) {
    rows.push_back({e.name, e.ce_model ? "ce-model" : "direct", e.description});
  }
  if (!models_dir.empty() && fs::is_directory(models_dir)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(models_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        CEModel m = load_model_file(f);
        rows.push_back({f.stem().string(), "file", m.name + " (" + f.string() + ")"});
      } catch (const Error& e) {
        rows.push_back({f.stem().string(), "invalid", e.what()});
      }
    }
  }
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back({{"name", r.name}, {"kind", r.kind}, {"description", r.description}});
    std::cout << arr.dump(2) << "\n";
    return kOk;
  }
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.name.size());
  for (const auto& r : rows) {
    std::cout << r.name << std::string(w - r.name.size() + 2, ' ') << r.kind
              << std::string(10 - std::min<std::size_t>(r.kind.size(), 9), ' ') << r.description << "\n";
  }
  std::cout << "(surface(g) accepts any g >= 1)\n";
  return kOk;
}

int cmd_report(const std::string& ref, const std::string& algebra, bool puncture_flag, bool json,
               const std::string& models_dir) {
  Resolved r = resolve(ref, models_dir);
  if (algebra == "betti") {
    if (!r.model) throw UnknownNameError("'" + ref + "' has no Chevalley-Eilenberg model; betti is unavailable");
    const ReportDocument doc = betti_report(*r.model);
    std::cout << (json ? to_json(doc) : to_table(doc));
    return kOk;
  }
  if (algebra == "table") {
    if (!r.data.compact()) throw DomainError("table needs a compact model");
    std::cout << summary_table(r.data);
    return kOk;
  }
  CohomologyData data = puncture_flag ? puncture(r.data) : r.data;
  const ReportDocument doc = build_report(data, algebra);
  std::cout << (json ? to_json(doc) : to_table(doc));
  return kOk;
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(text, &used, 0);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("--seed must be an unsigned integer (decimal or 0x hex), got '" + text + "'");
}

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed, int cases, const std::vector<int>& dims,
               bool json) {
  VerifyOptions opt;
  opt.seed = seed ? *seed : seed_from_env();
  opt.cases = cases;
  if (!dims.empty()) opt.dims = dims;
  const SuiteResult result = run_suite(suite_from_name(suite), opt);
  if (json) {
    std::cout << to_json(result);
  } else {
    std::cout << "suite " << suite << ", seed 0x" << std::hex << opt.seed << std::dec << ", " << opt.cases
              << " cases per check\n";
    std::cout << format_result(result);
  }
  return result.ok() ? kOk : kVerifyFailed;
}

int cmd_cocycle(const std::string& kind, int dim, const std::string& f_text, const std::string& g_text,
                const std::vector<std::string>& alpha_text, int slice, const std::string& angle_text, bool json) {
  if (dim != 2 && dim != 4 && dim != 6 && dim != 8) throw DomainError("torus dimension must be 2, 4, 6 or 8");
  const Torus t(dim / 2);
  const TrigFunction f = TrigFunction::parse(f_text);
  const TrigFunction g = TrigFunction::parse(g_text);
  TauValue value;
  if (kind == "roger") {
    if (static_cast<int>(alpha_text.size()) != dim) throw ParseError("--alpha needs one rational per coordinate");
    ConstantOneForm a;
    for (const auto& s : alpha_text) a.components.push_back(Rational::parse(s));
    value = roger_cocycle(t, a, f, g);
  } else if (kind == "ks") {
    value = TauValue(ks_cocycle(t, f, g), 0);
  } else if (kind == "singular") {
    if (slice < 1 || slice > dim) throw DomainError("--slice must be a coordinate index 1.." + std::to_string(dim));
    value = singular_cocycle(t, slice - 1, Rational::parse(angle_text), f, g);
  } else {
    throw UnknownNameError("unknown cocycle '" + kind + "' (roger, ks, singular)");
  }
  if (json) {
    nlohmann::ordered_json j;
    j["cocycle"] = kind;
    j["dim"] = dim;
    j["f"] = f.str(dim);
    j["g"] = g.str(dim);
    j["value"] = value.coefficient().str();
    j["tau_exponent"] = value.exponent();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic cohomology workbench"};
  app.require_subcommand(1);

  std::string models_dir;
  bool json = false;

  auto* catalog = app.add_subcommand("catalog", "List built-in models (and model files in --models-dir)");
  catalog->add_flag("--json", json, "Emit a JSON array");
  catalog->add_option("--models-dir", models_dir, "Directory of *.json model files");

  std::string ref;
  std::string algebra = "sp";
  bool puncture_flag = false;
  auto* report = app.add_subcommand("report", "Cohomology report for a model");
  report->add_option("model", ref, "Catalog name or path to a model file")->required();
  std::vector<std::string> algebras = report_algebras();
  algebras.push_back("betti");
  algebras.push_back("table");
  std::string algebra_help = "One of:";
  for (const auto& a : algebras) algebra_help += " " + a;
  report->add_option("--algebra", algebra, algebra_help)->capture_default_str();
  report->add_flag("--puncture", puncture_flag, "Remove a point first");
  report->add_flag("--json", json, "Emit a JSON report document");
  report->add_option("--models-dir", models_dir, "Directory searched for <model>.json");

  std::string suite = "all";
  std::string seed_text;
  int cases = 200;
  std::vector<int> dims;
  auto* verify = app.add_subcommand("verify", "Run randomised exact identity checks");
  verify->add_option("--suite", suite, "brylinski, bracket, cocycle or all")->capture_default_str();
  verify->add_option("--seed", seed_text, "Base seed (default 0xC0FFEE or $SYMCOH_SEED)");
  verify->add_option("--cases", cases, "Cases per check")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--dim", dims, "Chart/torus dimension 2n (repeatable; default 2 and 4)")
      ->check(CLI::IsMember({2, 4}));
  verify->add_flag("--json", json, "Emit JSON");

  std::string kind = "ks";
  int dim = 2;
  std::string f_text;
  std::string g_text;
  std::vector<std::string> alpha_text;
  int slice = 1;
  std::string angle_text = "0";
  auto* cocycle = app.add_subcommand("cocycle", "Evaluate a 2-cocycle on trigonometric polynomials on a torus");
  cocycle->add_option("--kind", kind, "roger, ks or singular")->capture_default_str();
  cocycle->add_option("--dim", dim, "Torus dimension 2n")->capture_default_str();
  cocycle->add_option("--f", f_text, "e.g. \"cos(0,1)\"")->required();
  cocycle->add_option("--g", g_text, "e.g. \"sin(0,1)\"")->required();
  cocycle->add_option("--alpha", alpha_text, "Constant 1-form components (roger)")->delimiter(',');
  cocycle->add_option("--slice", slice, "1-based coordinate fixed on the slice (singular)")->capture_default_str();
  cocycle->add_option("--angle", angle_text, "Slice angle as a multiple of tau: 0 or 1/2")->capture_default_str();
  cocycle->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(json, models_dir);
    if (report->parsed()) return cmd_report(ref, algebra, puncture_flag, json, models_dir);
    if (verify->parsed()) {
      std::optional<std::uint64_t> seed;
      if (!seed_text.empty()) seed = parse_seed(seed_text);
      return cmd_verify(suite, seed, cases, dims, json);
    }
    if (cocycle->parsed()) {
      return cmd_cocycle(kind, dim, f_text, g_text, alpha_text, slice, angle_text, json);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
