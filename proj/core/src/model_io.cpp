#include "symcoh/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symcoh/error.hpp"

namespace symcoh {

namespace {

using Json = nlohmann::ordered_json;

Rational parse_coeff(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": coefficient must be a string \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

RForm parse_terms(const Json& terms, int generators, const std::string& where) {
  if (!terms.is_array()) throw ParseError(where + ": expected a list of terms");
  RForm out(generators);
  for (const auto& term : terms) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("indices")) {
      throw ParseError(where + ": each term needs \"coeff\" and \"indices\"");
    }
    const Rational c = parse_coeff(term["coeff"], where);
    const auto& idx = term["indices"];
    if (!idx.is_array() || idx.size() != 2) throw ParseError(where + ": \"indices\" must be a pair");
    int seq[2];
    for (int k = 0; k < 2; ++k) {
      if (!idx[k].is_number_integer()) throw ParseError(where + ": indices must be integers");
      const int i = idx[k].get<int>();
      if (i < 1 || i > generators) {
        throw ParseError(where + ": index " + std::to_string(i) + " outside 1.." + std::to_string(generators));
      }
      seq[k] = i - 1;
    }
    const int s = sort_sign(seq);
    if (s == 0) continue;
    out.add_term(MultiIndex::of({std::min(seq[0], seq[1]), std::max(seq[0], seq[1])}), s > 0 ? c : -c);
  }
  return out;
}

Json terms_to_json(const RForm& a) {
  Json out = Json::array();
  for (const auto& [idx, c] : a.terms()) {
    Json term;
    term["coeff"] = c.str();
    Json indices = Json::array();
    for (int p : idx.positions()) indices.push_back(p + 1);
    term["indices"] = std::move(indices);
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace

CEModel parse_model(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model file must be a JSON object");
  for (const char* key : {"name", "generators", "omega"}) {
    if (!doc.contains(key)) throw ParseError(std::string("model file is missing \"") + key + "\"");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "generators" && key != "d" && key != "omega" && key != "vol") {
      throw ParseError("unknown key \"" + key + "\" in model file");
    }
  }

  CEModel model;
  if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
  model.name = doc["name"].get<std::string>();
  if (!doc["generators"].is_array()) throw ParseError("\"generators\" must be a list of names");
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    model.generators.push_back(g.get<std::string>());
  }
  const int count = model.dimension();
  if (count == 0 || count > MultiIndex::kMaxGenerators) throw ParseError("need between 1 and 32 generators");
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (model.generators[i] == model.generators[j]) {
        throw ParseError("duplicate generator name \"" + model.generators[i] + "\"");
      }
    }
  }

  model.differential.assign(count, RForm(count));
  if (doc.contains("d")) {
    if (!doc["d"].is_object()) throw ParseError("\"d\" must map generator names to term lists");
    for (const auto& [key, terms] : doc["d"].items()) {
      int position = -1;
      for (int i = 0; i < count; ++i) {
        if (model.generators[i] == key) position = i;
      }
      if (position < 0) throw ParseError("\"d\" refers to unknown generator \"" + key + "\"");
      model.differential[position] = parse_terms(terms, count, "d(" + key + ")");
    }
  }
  model.omega = parse_terms(doc["omega"], count, "omega");
  if (doc.contains("vol")) model.declared_volume = parse_coeff(doc["vol"], "vol");

  require_valid(model);
  return model;
}

CEModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string serialize_model(const CEModel& model) {
  Json doc;
  doc["name"] = model.name;
  doc["generators"] = model.generators;
  Json d = Json::object();
  for (int i = 0; i < model.dimension(); ++i) {
    if (!model.differential[i].is_zero()) d[model.generators[i]] = terms_to_json(model.differential[i]);
  }
  doc["d"] = std::move(d);
  doc["omega"] = terms_to_json(model.omega);
  if (model.declared_volume) doc["vol"] = model.declared_volume->str();
  return doc.dump(2) + "\n";
}

}  // namespace symcoh
