#include <gtest/gtest.h>

#include <filesystem>

#include <json.hpp>

#include "symcoh/catalog.hpp"
#include "symcoh/model_io.hpp"
#include "symcoh/report.hpp"

using namespace symcoh;

namespace {

const std::filesystem::path kData = SYMCOH_TEST_DATA_DIR;

void expect_same_model(const CEModel& a, const CEModel& b) {
  EXPECT_EQ(a.name, b.name);
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(a.differential, b.differential);
  EXPECT_EQ(a.omega, b.omega);
  EXPECT_EQ(a.declared_volume, b.declared_volume);
}

TEST(ModelIO, CatalogModelsRoundTrip) {
  for (const auto& entry : catalog_entries()) {
    if (entry.punctured) continue;
    const auto model = catalog_model(entry.name);
    if (!model) continue;
    const std::string text = serialize_model(*model);
    const CEModel back = parse_model(text);
    expect_same_model(*model, back);
    EXPECT_EQ(serialize_model(back), text);
    for (const auto& alg : report_algebras()) {
      EXPECT_EQ(to_json(build_report(from_ce_model(back), alg)), to_json(build_report(from_ce_model(*model), alg)))
          << entry.name << " " << alg;
    }
  }
}

TEST(ModelIO, FileMatchesBuiltInThurston) {
  const CEModel file = load_model_file(kData / "thurston.json");
  const CEModel built = thurston_model();
  EXPECT_EQ(file.differential, built.differential);
  EXPECT_EQ(file.omega, built.omega);
  EXPECT_EQ(file.declared_volume, Rational(1));
  EXPECT_EQ(betti_numbers(file), betti_numbers(built));
}

TEST(ModelIO, UnsortedIndicesCarrySign) {
  const CEModel t = load_model_file(kData / "torus2.json");
  // -e4 ^ e3 = e3 ^ e4
  EXPECT_EQ(t.omega, torus_model(2).omega);
}

TEST(ModelIO, Errors) {
  EXPECT_THROW(load_model_file(kData / "bad_syntax.json"), ParseError);
  EXPECT_THROW(load_model_file(kData / "degenerate.json"), InvariantError);
  EXPECT_THROW(load_model_file(kData / "bad_d2.json"), InvariantError);
  EXPECT_THROW(load_model_file(kData / "missing.json"), ParseError);

  const char* bad[] = {
      R"([1, 2])",
      R"({"name": "a", "generators": ["a", "b"]})",
      R"({"name": "a", "generators": ["a", "b"], "omega": [], "extra": 1})",
      R"({"name": "a", "generators": ["a", "a"], "omega": []})",
      R"({"name": "a", "generators": ["a", "b"], "omega": [{"coeff": 1, "indices": [1, 2]}]})",
      R"({"name": "a", "generators": ["a", "b"], "omega": [{"coeff": "1", "indices": [1, 3]}]})",
      R"({"name": "a", "generators": ["a", "b"], "omega": [{"coeff": "1", "indices": [1]}]})",
      R"({"name": "a", "generators": ["a", "b"], "omega": [{"coeff": "x", "indices": [1, 2]}]})",
      R"({"name": "a", "generators": ["a", "b"], "d": {"c": []}, "omega": [{"coeff": "1", "indices": [1, 2]}]})",
      R"({"name": "a", "generators": [], "omega": []})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_model(text), ParseError) << text;

  EXPECT_THROW(parse_model(R"({"name": "a", "generators": ["a", "b"], "omega": [{"coeff": "1", "indices": [2, 2]}]})"),
               InvariantError);
  EXPECT_THROW(
      parse_model(R"({"name": "a", "generators": ["a", "b"], "omega": [{"coeff": "1", "indices": [1, 2]}], "vol": "2"})"),
      InvariantError);
}

TEST(Report, JsonShapeAndDeterminism) {
  const CohomologyData d = catalog_data("punctured-thurston");
  const std::string text = to_json(build_report(d, "sp"));
  EXPECT_EQ(text, to_json(build_report(catalog_data("punctured-thurston"), "sp")));
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"model", "algebra", "total_dim", "components", "tau_exponent",
                                            "coordinates"}));
  EXPECT_EQ(j["total_dim"], 5);
  EXPECT_EQ(j["model"], "punctured-thurston");
  EXPECT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["coordinates"], (std::vector<std::string>{"x*", "p*", "z*"}));
}

TEST(Report, AlgebrasAndUnknownNames) {
  const CohomologyData d = catalog_data("torus(1)");
  EXPECT_EQ(build_report(d, "sp").total_dim, 3);
  EXPECT_EQ(build_report(d, "h1:poisson-c").total_dim, 1);
  EXPECT_EQ(build_report(catalog_data("punctured-torus(1)"), "ham").total_dim, 3);
  EXPECT_EQ(build_report(d, "center").total_dim, 2);
  EXPECT_THROW(build_report(d, "gl"), UnknownNameError);
}

TEST(Report, BettiAndTables) {
  const ReportDocument b = betti_report(thurston_model());
  ASSERT_EQ(b.components.size(), 5u);
  EXPECT_EQ(b.components[2].dim, 4);

  const std::string table = to_table(build_report(catalog_data("thurston"), "sp"));
  EXPECT_NE(table.find("Ker T"), std::string::npos);
  EXPECT_NE(table.find("[x*]"), std::string::npos);

  const std::string summary = summary_table(catalog_data("thurston"));
  EXPECT_NE(summary.find("punctured"), std::string::npos);
  EXPECT_THROW(summary_table(catalog_data("punctured-thurston")), DomainError);
}

}  // namespace
