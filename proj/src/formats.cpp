#include "towers/formats.hpp"

#include <json.hpp>

namespace towers {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw SchemaError("/", "not valid JSON");
  }
  return doc;
}

std::string require_string(const json& doc, const char* key, const std::string& path) {
  if (!doc.contains(key)) {
    throw SchemaError(path, "missing required key");
  }
  if (!doc[key].is_string()) {
    throw SchemaError(path, "expected a string");
  }
  return doc[key].get<std::string>();
}

std::vector<std::pair<ElementLabel, ElementLabel>> read_pairs(const json& arr,
                                                              const std::string& path) {
  if (!arr.is_array()) {
    throw SchemaError(path, "expected an array");
  }
  std::vector<std::pair<ElementLabel, ElementLabel>> pairs;
  pairs.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& entry = arr[i];
    const std::string entry_path = path + "/" + std::to_string(i);
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      throw SchemaError(entry_path, "expected a pair of labels");
    }
    pairs.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
  }
  return pairs;
}

}  // namespace

FinitePoset PosetDocument::to_poset() const {
  if (relation_kind == "cover") {
    return FinitePoset::close_covers(elements, pairs, name);
  }
  if (relation_kind == "leq") {
    return FinitePoset::validate(elements, pairs, name);
  }
  throw SchemaError("/relation_kind", "must be \"cover\" or \"leq\"");
}

PosetDocument parse_poset_doc(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw SchemaError("/", "expected an object");
  }

  PosetDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw SchemaError("/name", "expected a string");
    }
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("elements")) {
    throw SchemaError("/elements", "missing required key");
  }
  if (!doc["elements"].is_array()) {
    throw SchemaError("/elements", "expected an array of labels");
  }
  for (std::size_t i = 0; i < doc["elements"].size(); ++i) {
    if (!doc["elements"][i].is_string()) {
      throw SchemaError("/elements/" + std::to_string(i), "expected a string");
    }
    out.elements.push_back(doc["elements"][i].get<std::string>());
  }
  out.relation_kind = require_string(doc, "relation_kind", "/relation_kind");
  if (out.relation_kind != "cover" && out.relation_kind != "leq") {
    throw SchemaError("/relation_kind", "must be \"cover\" or \"leq\"");
  }
  if (!doc.contains("pairs")) {
    throw SchemaError("/pairs", "missing required key");
  }
  out.pairs = read_pairs(doc["pairs"], "/pairs");
  return out;
}

std::string serialize_poset(const FinitePoset& p) {
  json doc = json::object();
  if (!p.name().empty()) {
    doc["name"] = p.name();
  }
  doc["elements"] = p.elements();
  doc["relation_kind"] = "leq";
  json pairs = json::array();
  for (const auto& [a, b] : p.strict_pairs()) {
    pairs.push_back(json::array({a, b}));
  }
  doc["pairs"] = std::move(pairs);
  return doc.dump(2);
}

FinitePoset load_poset(std::string_view text) { return parse_poset_doc(text).to_poset(); }

SelfMap MapDocument::to_map(const FinitePoset& host) const {
  return SelfMap::from_table(host, assignment, name);
}

MapDocument parse_map_doc(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw SchemaError("/", "expected an object");
  }
  MapDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw SchemaError("/name", "expected a string");
    }
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("assignment")) {
    throw SchemaError("/assignment", "missing required key");
  }
  if (!doc["assignment"].is_object()) {
    throw SchemaError("/assignment", "expected an object of label -> label");
  }
  for (const auto& [key, value] : doc["assignment"].items()) {
    if (!value.is_string()) {
      throw SchemaError("/assignment/" + key, "expected a string");
    }
    out.assignment.emplace_back(key, value.get<std::string>());
  }
  return out;
}

std::string serialize_map(const FinitePoset& host, const SelfMap& f) {
  json doc = json::object();
  if (!f.name().empty()) {
    doc["name"] = f.name();
  }
  json assignment = json::object();
  for (int x = 0; x < host.size(); ++x) {
    assignment[host.label(x)] = host.label(f.apply(x));
  }
  doc["assignment"] = std::move(assignment);
  return doc.dump(2);
}

std::string export_dot(const FinitePoset& p) {
  std::string out = "digraph \"" + (p.name().empty() ? std::string("poset") : p.name()) + "\" {\n";
  for (const auto& label : p.elements()) {
    out += "  \"" + label + "\";\n";
  }
  for (const auto& [a, b] : p.cover_pairs()) {
    out += "  \"" + a + "\" -> \"" + b + "\";\n";
  }
  out += "}\n";
  return out;
}

namespace {

json trace_json(const PosetProvider& host, const TowerTrace& trace) {
  json doc = json::object();
  doc["base"] = host.format(trace.base);
  json stages = json::array();
  for (const TowerStage& stage : trace.stages) {
    stages.push_back(json{{"index", stage.index.to_string()},
                          {"element", host.format(stage.element)},
                          {"kind", std::string(stage_kind_name(stage.kind))}});
  }
  doc["stages"] = std::move(stages);
  return doc;
}

}  // namespace

std::string trace_to_json(const PosetProvider& host, const TowerTrace& trace) {
  return trace_json(host, trace).dump(2);
}

std::string certificate_to_json(const PosetProvider& host, const FixedPointCertificate& cert) {
  json doc = json::object();
  doc["omega"] = host.format(cert.omega);
  doc["tower"] = trace_json(host, cert.trace);
  doc["checks"] = json{{"omega_in_tower", cert.checks.omega_in_tower},
                       {"omega_fixed", cert.checks.omega_fixed},
                       {"omega_is_lub", cert.checks.omega_is_lub}};
  return doc.dump(2);
}

std::string report_to_json(const CorpusReport& report) {
  json doc = json::object();
  json rows = json::array();
  for (const CorpusCounts& counts : report.per_n) {
    rows.push_back(json{{"n", counts.n},
                        {"random", counts.random},
                        {"posets", counts.posets},
                        {"progressive_maps", counts.progressive_maps},
                        {"instances", counts.instances},
                        {"towers_compared", counts.towers_compared}});
  }
  doc["per_n"] = std::move(rows);
  json failures = json::array();
  for (const CorpusFailure& failure : report.failures) {
    failures.push_back(json{{"poset", failure.poset},
                            {"map", failure.map},
                            {"base", failure.base},
                            {"check", failure.check},
                            {"detail", failure.detail}});
  }
  doc["failures"] = std::move(failures);
  doc["elapsed_seconds"] = report.elapsed_seconds;
  doc["random_seeds"] = report.random_seeds;
  return doc.dump(2);
}

}  // namespace towers
