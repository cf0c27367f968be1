#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "wmst/graph.hpp"

namespace wmst {

/// An instance together with the generator configuration that produced it.
/// The config object is carried through read/write untouched so that a file
/// round-trips byte for byte.
struct InstanceFile {
  WmstInstance instance;
  nlohmann::ordered_json config;
};

/// Parses {"n": int, "edges": [{"u", "v", "predicted": "p/q", "actual": "p/q"}]}
/// plus an optional "config" object. Weights may also be JSON integers or
/// decimal strings. Throws ParseError on malformed JSON.
RawInstance parse_raw_instance(std::string_view json_text);

InstanceFile read_instance(std::string_view json_text);
InstanceFile load_instance_file(const std::string& path);

/// Deterministic serialization: keys in fixed order, weights as "num/den".
std::string write_instance(const WmstInstance& instance,
                           const nlohmann::ordered_json& config = nlohmann::ordered_json());

}  // namespace wmst
