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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kuniform/bits.hpp"
#include "kuniform/pauli.hpp"

namespace kuniform {

/// Simple undirected graph on 0-based vertices, held as a symmetric GF(2)
/// adjacency matrix (one bit row per vertex, zero diagonal).
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n), adj_(n, BitVec(n)) {}

  std::size_t num_vertices() const { return n_; }

  std::size_t num_edges() const {
    std::size_t total = 0;
    for (const BitVec& row : adj_) {
      total += row.count();
    }
    return total / 2;
  }

  bool has_edge(std::size_t i, std::size_t j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_[i].test(j);
  }

  void add_edge(std::size_t i, std::size_t j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(i));
    }
    if (adj_[i].test(j)) {
      throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
    }
    adj_[i].set(j);
    adj_[j].set(i);
  }

  /// Adjacency row of vertex i (never contains i itself).
  const BitVec& neighborhood(std::size_t i) const {
    check_vertex(i);
    return adj_[i];
  }

  std::size_t degree(std::size_t i) const { return neighborhood(i).count(); }

  /// Edge list normalized to i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges());
    for (std::size_t i = 0; i < n_; ++i) {
      for (auto j = adj_[i].find_next(i); j != BitVec::npos; j = adj_[i].find_next(j)) {
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    return out;
  }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(std::size_t i) const {
    if (i >= n_) {
      throw std::invalid_argument("Graph: vertex " + std::to_string(i) +
                                  " out of range for n=" + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<BitVec> adj_;
};

/// Stabilizer generator of vertex i: X on i, Z on each neighbor, I elsewhere.
/// Its weight is degree(i) + 1.
inline PauliWord correlation_operator(const Graph& g, std::size_t i) {
  BitVec x(g.num_vertices());
  x.set(i);
  return PauliWord(std::move(x), g.neighborhood(i), 0);
}

/// Rows of letters with X on the diagonal, Z where an edge exists, I where
/// not: row i spells out correlation_operator(g, i).
inline std::string adjacency_display(const Graph& g) {
  std::string out;
  const std::size_t n = g.num_vertices();
  out.reserve(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(i == j ? 'X' : (g.neighborhood(i).test(j) ? 'Z' : 'I'));
    }
    out.push_back('\n');
  }
  return out;
}

enum class Family { matching, complete, cycle, bilayer, torus };

/// A named graph family plus its integer parameters: {n} for matching,
/// complete and cycle; {layer size} for bilayer; {rows, cols} for torus.
struct FamilySpec {
  Family family;
  std::vector<int> params;
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::matching:
      return "matching";
    case Family::complete:
      return "complete";
    case Family::cycle:
      return "cycle";
    case Family::bilayer:
      return "bilayer";
    case Family::torus:
      return "torus";
  }
  return "?";
}

inline Family family_from_name(std::string_view name) {
  for (Family f : {Family::matching, Family::complete, Family::cycle, Family::bilayer,
                   Family::torus}) {
    if (name == family_name(f)) {
      return f;
    }
  }
  throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

/// Disjoint pairs (0,1),(2,3),...; an odd leftover vertex is attached to
/// vertex 0, turning the first pair into a connected triple.
inline Graph make_matching(int n) {
  if (n < 2) {
    throw std::invalid_argument("matching family requires n >= 2");
  }
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; i += 2) {
    g.add_edge(i, i + 1);
  }
  if (n % 2 == 1) {
    g.add_edge(0, n - 1);
  }
  return g;
}

inline Graph make_complete(int n) {
  if (n < 2) {
    throw std::invalid_argument("complete family requires n >= 2");
  }
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle family requires n >= 3 (2-uniform for n >= 5)");
  }
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
  }
  return g;
}

/// Two complete layers of `layer_size` vertices each (layer A: 0..n-1,
/// layer B: n..2n-1) joined by the perfect matching i <-> i+n.
inline Graph make_bilayer(int layer_size) {
  if (layer_size < 2) {
    throw std::invalid_argument(
        "bilayer family requires layer size n >= 2 (3-uniform for n >= 3)");
  }
  const int n = layer_size;
  Graph g(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
      g.add_edge(n + i, n + j);
    }
    g.add_edge(i, n + i);
  }
  return g;
}

/// l x m grid with periodic boundaries along both directions; vertex (r, c)
/// has index r*m + c and degree 4.
inline Graph make_torus(int l, int m) {
  if (l < 3 || m < 3) {
    throw std::invalid_argument(
        "torus family requires rows, cols >= 3 (4-uniform for rows, cols >= 5)");
  }
  Graph g(static_cast<std::size_t>(l) * static_cast<std::size_t>(m));
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < m; ++c) {
      g.add_edge(r * m + c, ((r + 1) % l) * m + c);
      g.add_edge(r * m + c, r * m + (c + 1) % m);
    }
  }
  return g;
}

inline Graph generate_family(const FamilySpec& spec) {
  const auto param = [&](std::size_t i) -> int {
    if (i >= spec.params.size()) {
      throw std::invalid_argument(std::string("family \"") + family_name(spec.family) +
                                  "\" is missing a parameter");
    }
    return spec.params[i];
  };
  switch (spec.family) {
    case Family::matching:
      return make_matching(param(0));
    case Family::complete:
      return make_complete(param(0));
    case Family::cycle:
      return make_cycle(param(0));
    case Family::bilayer:
      return make_bilayer(param(0));
    case Family::torus:
      return make_torus(param(0), param(1));
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace kuniform
