#pragma once

// Canonical JSON graph files: {"n": int, "edges": [[u, v], ...]} with 0-based
// vertices, u < v, and edges sorted lexicographically.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "gzeta/graph.hpp"

namespace gzeta {

inline std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.num_vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

/// Strict reader: anything a canonical writer would not produce is rejected.
inline Graph graph_from_json(const std::string& text, std::string name = "file") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_input, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw Error(ErrorCode::malformed_input, "graph JSON needs 'n' and 'edges'");
  if (!doc["n"].is_number_integer()) throw Error(ErrorCode::malformed_input, "'n' must be an integer");
  if (!doc["edges"].is_array()) throw Error(ErrorCode::malformed_input, "'edges' must be an array");
  const int n = doc["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw Error(ErrorCode::malformed_input, "each edge must be a pair of integers");
    const Edge e{item[0].get<int>(), item[1].get<int>()};
    if (e.first >= e.second) throw Error(ErrorCode::malformed_input, "edges must satisfy u < v");
    if (!edges.empty() && !(edges.back() < e))
      throw Error(ErrorCode::malformed_input, "edges must be sorted and unique");
    edges.push_back(e);
  }
  try {
    return Graph::from_edges(n, std::move(edges), false, std::move(name));
  } catch (const Error& e) {
    throw Error(ErrorCode::malformed_input, e.what());
  }
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::malformed_input, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str(), path);
}

}  // namespace gzeta
