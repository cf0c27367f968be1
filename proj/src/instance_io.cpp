#include "wmst/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "wmst/errors.hpp"

namespace wmst {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw WmstError(ErrorCode::kParseError, e.what());
  }
}

std::optional<Rational> weight_field(const Json& edge, const char* key) {
  auto it = edge.find(key);
  if (it == edge.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return Rational::parse(it->get<std::string>());
  if (it->is_number_integer()) return Rational(it->get<std::int64_t>());
  throw WmstError(ErrorCode::kParseError, std::string("weight '") + key + "' must be a fraction string or integer");
}

std::int64_t int_field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw WmstError(ErrorCode::kParseError, std::string("missing integer field '") + key + "'");
  }
  return it->get<std::int64_t>();
}

}  // namespace

RawInstance parse_raw_instance(std::string_view json_text) {
  Json doc = parse_json(json_text);
  if (!doc.is_object()) throw WmstError(ErrorCode::kParseError, "instance must be a JSON object");
  RawInstance raw;
  raw.n = int_field(doc, "n");
  auto edges = doc.find("edges");
  if (edges == doc.end() || !edges->is_array()) throw WmstError(ErrorCode::kParseError, "missing 'edges' array");
  for (const Json& e : *edges) {
    if (!e.is_object()) throw WmstError(ErrorCode::kParseError, "edge entries must be objects");
    raw.edges.push_back(RawEdge{int_field(e, "u"), int_field(e, "v"), weight_field(e, "predicted"),
                                weight_field(e, "actual")});
  }
  return raw;
}

InstanceFile read_instance(std::string_view json_text) {
  RawInstance raw = parse_raw_instance(json_text);
  Json doc = parse_json(json_text);
  Json config;
  if (auto it = doc.find("config"); it != doc.end()) config = *it;
  return InstanceFile{validate_instance(raw), std::move(config)};
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WmstError(ErrorCode::kParseError, "cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_instance(buffer.str());
}

std::string write_instance(const WmstInstance& instance, const nlohmann::ordered_json& config) {
  Json doc;
  doc["n"] = instance.graph().vertex_count();
  Json edges = Json::array();
  for (const Edge& e : instance.graph().edges()) {
    Json entry;
    entry["u"] = e.u;
    entry["v"] = e.v;
    entry["predicted"] = instance.predicted()[e.id].to_fraction_string();
    entry["actual"] = instance.actual()[e.id].to_fraction_string();
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  if (!config.is_null()) doc["config"] = config;
  return doc.dump(2) + "\n";
}

}  // namespace wmst
