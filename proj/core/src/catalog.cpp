#include "symcoh/catalog.hpp"

#include <charconv>

#include "symcoh/error.hpp"

namespace symcoh {

namespace {

constexpr std::string_view kPunctured = "punctured-";

/// "prefix(k)" -> k
std::optional<int> indexed(std::string_view name, std::string_view prefix) {
  if (name.size() < prefix.size() + 3 || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
  const std::string_view digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return k;
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 3; ++n) {
    out.push_back({"torus(" + std::to_string(n) + ")", "standard torus T^" + std::to_string(2 * n), true, false});
  }
  out.push_back({"thurston", "Kodaira-Thurston nilmanifold X^4", true, false});
  out.push_back({"sphere", "2-sphere", false, false});
  for (int g = 1; g <= 3; ++g) {
    out.push_back({"surface(" + std::to_string(g) + ")",
                   "closed surface of genus " + std::to_string(g), false, false});
  }
  const std::size_t compact = out.size();
  for (std::size_t i = 0; i < compact; ++i) {
    out.push_back({std::string(kPunctured) + out[i].name, out[i].description + " minus a point", out[i].ce_model,
                   true});
  }
  return out;
}

std::optional<CEModel> catalog_model(std::string_view name) {
  if (name == "thurston") return thurston_model();
  if (auto n = indexed(name, "torus"); n && *n >= 1 && *n <= 3) return torus_model(*n);
  return std::nullopt;
}

CohomologyData catalog_data(std::string_view name) {
  if (name.substr(0, kPunctured.size()) == kPunctured) return puncture(catalog_data(name.substr(kPunctured.size())));
  if (auto model = catalog_model(name)) return from_ce_model(*model);
  if (name == "sphere") return sphere_data();
  if (auto g = indexed(name, "surface"); g && *g >= 1) return surface_data(*g);
  throw UnknownNameError("unknown model '" + std::string(name) + "'");
}

}  // namespace symcoh
