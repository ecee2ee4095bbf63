#pragma once

// Built-in models addressed by name: torus(1..3), thurston, sphere,
// surface(g) for g >= 1, and "punctured-<name>" for any of these.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcoh/ce_model.hpp"
#include "symcoh/classification.hpp"

namespace symcoh {

struct CatalogEntry {
  std::string name;
  std::string description;
  /// Backed by a Chevalley-Eilenberg model (otherwise entered as cohomology data).
  bool ce_model = false;
  bool punctured = false;
};

/// Listing order: torus(1..3), thurston, sphere, surface(1..3), then punctured variants.
std::vector<CatalogEntry> catalog_entries();

/// CE model for a compact catalog name, if it has one.
std::optional<CEModel> catalog_model(std::string_view name);

/// Throws UnknownNameError for names outside the catalog.
CohomologyData catalog_data(std::string_view name);

}  // namespace symcoh
