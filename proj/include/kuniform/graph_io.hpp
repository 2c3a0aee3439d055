// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kuniform/graph.hpp"

namespace kuniform {

enum class GraphFormat { json, edgelist };

/// JSON form: {"n": <int>, "edges": [[i, j], ...]}.
inline Graph load_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw std::invalid_argument("graph JSON: expected an object with \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw std::invalid_argument("graph JSON: \"n\" must be a positive integer");
  }
  if (!doc["edges"].is_array()) {
    throw std::invalid_argument("graph JSON: \"edges\" must be an array");
  }
  Graph g(doc["n"].get<std::size_t>());
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_integer() ||
        !edge[1].is_number_integer()) {
      throw std::invalid_argument("graph JSON: each edge must be a pair of integers");
    }
    const long long i = edge[0].get<long long>();
    const long long j = edge[1].get<long long>();
    if (i < 0 || j < 0) {
      throw std::invalid_argument("graph JSON: negative vertex index");
    }
    g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return g;
}

/// Edgelist form: first line n, then one "i j" pair per line.
inline Graph load_graph_edgelist(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1) {
    throw std::invalid_argument("graph edgelist: first token must be a positive vertex count");
  }
  Graph g(static_cast<std::size_t>(n));
  long long i = 0;
  while (in >> i) {
    long long j = 0;
    if (!(in >> j)) {
      throw std::invalid_argument("graph edgelist: dangling endpoint " + std::to_string(i));
    }
    if (i < 0 || j < 0) {
      throw std::invalid_argument("graph edgelist: negative vertex index");
    }
    g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  if (!in.eof()) {
    throw std::invalid_argument("graph edgelist: non-numeric token");
  }
  return g;
}

inline Graph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::json ? load_graph_json(in) : load_graph_edgelist(in);
}

/// Sniffs the format from the first non-whitespace byte ('{' means JSON).
inline Graph load_graph_auto(std::istream& in) {
  in >> std::ws;
  return load_graph(in, in.peek() == '{' ? GraphFormat::json : GraphFormat::edgelist);
}

inline void save_graph(const Graph& g, std::ostream& out, GraphFormat format) {
  const auto edges = g.edges();  // normalized i < j, sorted
  if (format == GraphFormat::json) {
    nlohmann::ordered_json doc;
    doc["n"] = g.num_vertices();
    doc["edges"] = nlohmann::json::array();
    for (const auto& [i, j] : edges) {
      doc["edges"].push_back({i, j});
    }
    out << doc.dump() << '\n';
  } else {
    out << g.num_vertices() << '\n';
    for (const auto& [i, j] : edges) {
      out << i << ' ' << j << '\n';
    }
  }
}

inline std::string save_graph_string(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  save_graph(g, out, format);
  return out.str();
}

}  // namespace kuniform
