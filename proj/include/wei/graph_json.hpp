#pragma once

// Graph JSON:
//   {"vertices": ["v1", "v2", ...], "edges": [{"u": "v1", "v": "v2", "w": 2}, ...]}
// Vertices are referenced by name. Unknown fields are rejected.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wei/weighted_graph.hpp"

namespace wei {

/// Malformed JSON or a document that does not follow the schema.
class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void reject_unknown_fields(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) throw GraphParseError("unknown field '" + it.key() + "' in " + where);
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw GraphParseError(std::string("missing field '") + key + "' in " + where);
  return *it;
}

}  // namespace detail

/// Schema problems throw GraphParseError; well-formed documents describing an
/// invalid graph (loops, duplicate edges, bad weights, unknown vertices) throw
/// GraphValidationError.
inline WeightedGraph parse_graph_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw GraphParseError("graph document must be a JSON object");
  detail::reject_unknown_fields(doc, {"vertices", "edges"}, "graph");

  const auto& verts = detail::require_field(doc, "vertices", "graph");
  if (!verts.is_array()) throw GraphParseError("'vertices' must be an array of strings");
  RawGraph raw;
  std::map<std::string, std::int64_t> index;
  for (const auto& v : verts) {
    if (!v.is_string()) throw GraphParseError("'vertices' must be an array of strings");
    auto name = v.get<std::string>();
    index.emplace(name, static_cast<std::int64_t>(raw.vertex_names.size()));
    raw.vertex_names.push_back(std::move(name));
  }

  const auto& edges = detail::require_field(doc, "edges", "graph");
  if (!edges.is_array()) throw GraphParseError("'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_object()) throw GraphParseError("each edge must be an object");
    detail::reject_unknown_fields(e, {"u", "v", "w"}, "edge");
    const auto& u = detail::require_field(e, "u", "edge");
    const auto& v = detail::require_field(e, "v", "edge");
    const auto& w = detail::require_field(e, "w", "edge");
    if (!u.is_string() || !v.is_string()) throw GraphParseError("edge endpoints must be vertex names");
    if (!w.is_number_integer()) throw GraphParseError("edge weight must be an integer");
    auto lookup = [&](const nlohmann::json& name) {
      auto it = index.find(name.get<std::string>());
      if (it == index.end())
        throw GraphValidationError(GraphValidationError::Kind::bad_index,
                                   "edge references unknown vertex '" + name.get<std::string>() + "'");
      return it->second;
    };
    raw.edges.push_back({lookup(u), lookup(v), w.get<std::int64_t>()});
  }
  return validate_graph(raw);
}

inline WeightedGraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_graph_json(doc);
}

inline nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", g.vertex_name(e.u)}, {"v", g.vertex_name(e.v)}, {"w", e.w}});
  return {{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

}  // namespace wei
