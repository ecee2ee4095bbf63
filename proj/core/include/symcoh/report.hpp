#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcoh/ce_model.hpp"
#include "symcoh/classification.hpp"

namespace symcoh {

/// Machine-readable result of one report query.
struct ReportDocument {
  std::string model;
  std::string algebra;
  int total_dim = 0;
  std::vector<ReportComponent> components;
  /// Power of tau carried by reported values; absent for pure dimensions.
  std::optional<int> tau_exponent;
  /// Names of the H^1 basis vectors that kernel bases are expressed in.
  std::vector<std::string> coordinates;
};

/// Accepted algebra names, in help order.
std::vector<std::string> report_algebras();

/// algebra: poisson-c, poisson, ham, sp, h1:poisson-c0, h1:poisson-c, h1:poisson,
/// h1:ham, center. Throws UnknownNameError otherwise.
ReportDocument build_report(const CohomologyData& data, std::string_view algebra);

/// Betti numbers of a CE model, one component per degree.
ReportDocument betti_report(const CEModel& model);

/// Keys in fixed order: model, algebra, total_dim, components, tau_exponent, coordinates.
std::string to_json(const ReportDocument& doc);
/// Aligned plain-text table.
std::string to_table(const ReportDocument& doc);

/// H^2 dimensions of all four algebras for X and X minus a point, one row per
/// algebra. Requires compact data.
std::string summary_table(const CohomologyData& compact);

}  // namespace symcoh
