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
#include <string>
#include <vector>

#include "kuniform/graph.hpp"

namespace kuniform {

struct Gate {
  enum class Kind { H, CZ };
  Kind kind;
  int a = 0;
  int b = -1;  // CZ partner; unused for H

  bool operator==(const Gate&) const = default;
};

/// Preparation circuit: one H per qubit, then one CZ per edge.
struct Circuit {
  std::size_t n = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

/// H on every qubit in ascending order, then CZ gates with endpoints
/// normalized to a < b and sorted lexicographically. Gate count is n + |E|.
inline Circuit emit_circuit(const Graph& g) {
  Circuit c;
  c.n = g.num_vertices();
  c.gates.reserve(c.n + g.num_edges());
  for (std::size_t q = 0; q < c.n; ++q) {
    c.gates.push_back({Gate::Kind::H, static_cast<int>(q), -1});
  }
  for (const auto& [i, j] : g.edges()) {
    c.gates.push_back({Gate::Kind::CZ, i, j});
  }
  return c;
}

enum class CircuitFormat { plain, qasm2 };

/// plain: one gate per line ("h <i>" / "cz <i> <j>").
/// qasm2: OPENQASM 2.0 header, a single register q[n], same gate order.
inline std::string render(const Circuit& c, CircuitFormat format) {
  std::string out;
  if (format == CircuitFormat::qasm2) {
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(c.n) + "];\n";
  }
  for (const Gate& gate : c.gates) {
    if (format == CircuitFormat::plain) {
      out += gate.kind == Gate::Kind::H
                 ? "h " + std::to_string(gate.a)
                 : "cz " + std::to_string(gate.a) + " " + std::to_string(gate.b);
    } else {
      out += gate.kind == Gate::Kind::H
                 ? "h q[" + std::to_string(gate.a) + "];"
                 : "cz q[" + std::to_string(gate.a) + "],q[" + std::to_string(gate.b) + "];";
    }
    out += '\n';
  }
  return out;
}

}  // namespace kuniform
