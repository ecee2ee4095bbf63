#include "symcoh/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "symcoh/error.hpp"

namespace symcoh {

namespace {

using Json = nlohmann::ordered_json;

ReportDocument from_h2(const CohomologyData& data, const H2Report& r, std::string_view algebra) {
  ReportDocument doc;
  doc.model = data.name;
  doc.algebra = std::string(algebra);
  doc.total_dim = r.total_dim;
  doc.components = r.components;
  doc.coordinates = data.labels;
  return doc;
}

ReportDocument single(const CohomologyData& data, std::string_view algebra, std::string label, int dim) {
  ReportDocument doc;
  doc.model = data.name;
  doc.algebra = std::string(algebra);
  doc.total_dim = dim;
  doc.components.push_back({std::move(label), dim, {}});
  doc.coordinates = data.labels;
  return doc;
}

std::string vector_str(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

/// Display width in code points; labels contain non-ASCII symbols.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); }

}  // namespace

std::vector<std::string> report_algebras() {
  return {"poisson-c", "poisson", "ham", "sp", "h1:poisson-c0", "h1:poisson-c", "h1:poisson", "h1:ham", "center"};
}

ReportDocument build_report(const CohomologyData& data, std::string_view algebra) {
  if (algebra == "poisson-c") return from_h2(data, h2(data, Algebra2::PoissonCompact), algebra);
  if (algebra == "poisson") return from_h2(data, h2(data, Algebra2::Poisson), algebra);
  if (algebra == "ham") return from_h2(data, h2(data, Algebra2::Ham), algebra);
  if (algebra == "sp") return from_h2(data, h2(data, Algebra2::Sp), algebra);
  if (algebra == "h1:poisson-c0") return single(data, algebra, "H¹", h1(data, Algebra1::PoissonCompactZero).dim);
  if (algebra == "h1:poisson-c") return single(data, algebra, "H¹", h1(data, Algebra1::PoissonCompact).dim);
  if (algebra == "h1:poisson") return single(data, algebra, "H¹", h1(data, Algebra1::Poisson).dim);
  if (algebra == "h1:ham") return single(data, algebra, "H¹", h1(data, Algebra1::Ham).dim);
  if (algebra == "center") return single(data, algebra, "center", center_dim(data));
  throw UnknownNameError("unknown algebra '" + std::string(algebra) + "'");
}

ReportDocument betti_report(const CEModel& model) {
  ReportDocument doc;
  doc.model = model.name;
  doc.algebra = "betti";
  for (int k = 0; k <= model.dimension(); ++k) {
    const int b = betti(model, k);
    doc.components.push_back({"b" + std::to_string(k), b, {}});
    doc.total_dim += b;
  }
  return doc;
}

std::string to_json(const ReportDocument& doc) {
  Json j;
  j["model"] = doc.model;
  j["algebra"] = doc.algebra;
  j["total_dim"] = doc.total_dim;
  Json comps = Json::array();
  for (const auto& c : doc.components) {
    Json basis = Json::array();
    for (const auto& v : c.basis) {
      Json vec = Json::array();
      for (const auto& x : v) vec.push_back(x.str());
      basis.push_back(std::move(vec));
    }
    comps.push_back(Json{{"label", c.label}, {"dim", c.dim}, {"basis", std::move(basis)}});
  }
  j["components"] = std::move(comps);
  j["tau_exponent"] = doc.tau_exponent ? Json(*doc.tau_exponent) : Json(nullptr);
  j["coordinates"] = doc.coordinates;
  return j.dump(2) + "\n";
}

std::string to_table(const ReportDocument& doc) {
  std::ostringstream os;
  os << doc.model << "  " << doc.algebra << "  total " << doc.total_dim << "\n";
  std::size_t w = width("component");
  for (const auto& c : doc.components) w = std::max(w, width(c.label));
  os << "  " << pad("component", w) << "  dim  basis\n";
  for (const auto& c : doc.components) {
    os << "  " << pad(c.label, w) << "  " << std::setw(3) << c.dim << "  ";
    for (std::size_t i = 0; i < c.basis.size(); ++i) os << (i ? " " : "") << vector_str(c.basis[i]);
    os << "\n";
  }
  if (!doc.coordinates.empty() &&
      std::any_of(doc.components.begin(), doc.components.end(), [](const auto& c) { return !c.basis.empty(); })) {
    os << "  coordinates:";
    for (const auto& l : doc.coordinates) os << " [" << l << "]";
    os << "\n";
  }
  return os.str();
}

std::string summary_table(const CohomologyData& compact) {
  if (!compact.compact()) throw DomainError("summary_table needs compact data");
  const CohomologyData punctured = puncture(compact);
  std::ostringstream os;
  os << compact.name << "  (b1 = " << compact.b1 << ")\n";
  os << "  algebra     compact  punctured\n";
  const std::pair<Algebra2, const char*> rows[] = {
      {Algebra2::PoissonCompact, "C_c"}, {Algebra2::Poisson, "C"}, {Algebra2::Ham, "ham"}, {Algebra2::Sp, "sp"}};
  for (const auto& [a, label] : rows) {
    os << "  " << pad(label, 10) << std::setw(8) << h2(compact, a).total_dim << std::setw(11)
       << h2(punctured, a).total_dim << "\n";
  }
  return os.str();
}

}  // namespace symcoh
