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

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kuniform/dense.hpp"
#include "kuniform/uniformity.hpp"

namespace kuniform {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson witness_json(const std::vector<int>& subset, const PauliWord& word) {
  OrderedJson j;
  j["subset"] = subset;
  j["pauli"] = word.str();
  return j;
}

inline OrderedJson to_json(const UniformityReport& report) {
  OrderedJson j;
  j["n"] = report.n;
  if (report.decided_k) {
    j["k"] = *report.decided_k;
    if (report.decided_uniform) {
      j["uniform"] = *report.decided_uniform;
    }
  }
  j["uniformity"] = report.uniformity;
  j["exact"] = report.exact;
  j["ame"] = report.ame;
  OrderedJson weights = OrderedJson::object();
  OrderedJson witnesses = OrderedJson::object();
  for (const auto& [size, entry] : report.table.by_size) {
    weights[std::to_string(size)] = entry.min_weight;
    witnesses[std::to_string(size)] = witness_json(entry.witness, entry.word);
  }
  j["min_weights"] = weights;
  j["witnesses"] = witnesses;
  if (report.breaking) {
    OrderedJson b = witness_json(report.breaking->subset, report.breaking->word);
    b["weight"] = report.breaking->weight;
    j["breaking_witness"] = b;
  } else {
    j["breaking_witness"] = nullptr;
  }
  j["truncated"] = report.truncated;
  return j;
}

inline std::string subset_display(const std::vector<int>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) {
      out += ",";
    }
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

inline std::string pretty_report(const UniformityReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << '\n';
  if (report.decided_k) {
    out << "decision at k=" << *report.decided_k << ": "
        << (report.decided_uniform && *report.decided_uniform ? "uniform" : "not uniform")
        << '\n';
  }
  out << "uniformity: " << report.uniformity;
  if (report.truncated) {
    out << " (lower bound, search truncated)";
  } else if (report.exact) {
    out << " (exact)";
  }
  if (report.ame) {
    out << " [absolutely maximally entangled]";
  }
  out << '\n';
  out << "min product weights:\n";
  for (const auto& [size, entry] : report.table.by_size) {
    out << "  size " << size << ": weight " << entry.min_weight << "  witness "
        << subset_display(entry.witness) << " " << entry.word.str() << '\n';
  }
  if (report.breaking) {
    out << "breaking witness: " << subset_display(report.breaking->subset) << " "
        << report.breaking->word.str() << " (weight " << report.breaking->weight << ")\n";
  }
  return out.str();
}

/// Per-size verdict entry for the oracle verification report.
inline OrderedJson verdict_json(const OracleVerdict& verdict, bool dense_method) {
  OrderedJson j;
  j["uniform"] = verdict.uniform;
  j["subsets_checked"] = verdict.subsets_checked;
  if (verdict.failing_subset) {
    OrderedJson f;
    f["subset"] = *verdict.failing_subset;
    if (dense_method) {
      f["max_deviation"] = verdict.failure_deviation;
    } else {
      f["cut_rank"] = verdict.failure_cut_rank;
    }
    f["entropy_bits"] = verdict.failure_entropy_bits;
    j["first_failure"] = f;
  }
  return j;
}

}  // namespace kuniform
