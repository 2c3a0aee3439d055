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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "kuniform/graph.hpp"
#include "kuniform/pauli.hpp"

namespace kuniform {

/// Thrown when an enumeration would exceed its subset budget or a dense
/// computation would exceed its qubit cap.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg, std::uint64_t required = 0)
      : std::runtime_error(msg), required_(required) {}

  /// Subset count the rejected call would have needed (0 when not a count).
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

/// C(n, k), saturating at the maximum representable value.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(r);
}

/// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
/// Returns false (leaving the subset unchanged) at the last combination.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int j = k - 1;
  while (j >= 0 && c[j] == n - k + j) {
    --j;
  }
  if (j < 0) {
    return false;
  }
  ++c[j];
  for (int t = j + 1; t < k; ++t) {
    c[t] = c[t - 1] + 1;
  }
  return true;
}

/// The rank-th k-subset of {0..n-1} in lexicographic order.
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> c(static_cast<std::size_t>(k));
  int v = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (;;) {
      const std::uint64_t block = binomial(n - v - 1, k - pos - 1);
      if (rank < block) {
        break;
      }
      rank -= block;
      ++v;
    }
    c[static_cast<std::size_t>(pos)] = v++;
  }
  return c;
}

/// Product of the correlation operators of `subset`, folded with the exact
/// Pauli multiply. The X support is the subset itself; the Z support is the
/// symmetric difference of the subset's neighborhoods.
inline PauliWord subset_product(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) {
    throw std::invalid_argument("subset_product: empty subset");
  }
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("subset_product: repeated vertex in subset");
  }
  PauliWord p = correlation_operator(g, static_cast<std::size_t>(subset.front()));
  for (std::size_t t = 1; t < subset.size(); ++t) {
    p *= correlation_operator(g, static_cast<std::size_t>(subset[t]));
  }
  return p;
}

struct SizeEntry {
  int min_weight = 0;
  std::vector<int> witness;
  PauliWord word;
};

/// Per-size minimum product weights. Witnesses are the first subsets (in
/// lexicographic order within each size) attaining the size's minimum.
struct ProductWeightTable {
  std::size_t n = 0;
  int k_max_searched = 0;
  std::map<int, SizeEntry> by_size;
};

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000;  // max subsets across all sizes
  int threads = 0;                     // 0 = hardware concurrency
};

namespace detail {

inline int resolve_threads(int threads) {
  if (threads > 0) {
    return threads;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

struct ScanBest {
  int weight = std::numeric_limits<int>::max();
  std::uint64_t rank = 0;
  std::vector<int> subset;
};

/// Scans ranks [lo, hi) of the size-j combinations of g's vertices and
/// records the minimum product weight with the first rank attaining it.
inline ScanBest scan_range(const Graph& g, int j, std::uint64_t lo, std::uint64_t hi) {
  const int n = static_cast<int>(g.num_vertices());
  ScanBest best;
  if (lo >= hi) {
    return best;
  }
  std::vector<int> comb = unrank_combination(n, j, lo);
  BitVec z(g.num_vertices());
  BitVec support(g.num_vertices());
  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    z.reset();
    for (int v : comb) {
      z ^= g.neighborhood(static_cast<std::size_t>(v));
    }
    support = z;
    for (int v : comb) {
      support.set(static_cast<std::size_t>(v));
    }
    const int w = static_cast<int>(support.count());
    if (w < best.weight) {
      best.weight = w;
      best.rank = rank;
      best.subset = comb;
      if (w == j) {
        break;  // weight can never drop below the subset size
      }
    }
    next_combination(comb, n);
  }
  return best;
}

/// Minimum over all size-j subsets, merged from contiguous rank chunks by
/// (weight, rank) so the result is identical for any worker count.
inline SizeEntry scan_size(const Graph& g, int j, int threads) {
  const int n = static_cast<int>(g.num_vertices());
  const std::uint64_t total = binomial(n, j);
  const int workers = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(resolve_threads(threads)), std::max<std::uint64_t>(total / 1024, 1)));

  ScanBest best;
  if (workers <= 1) {
    best = scan_range(g, j, 0, total);
  } else {
    std::vector<ScanBest> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / workers;
      const std::uint64_t hi = total * (static_cast<std::uint64_t>(t) + 1) / workers;
      pool.emplace_back([&g, j, lo, hi, t, &partial] { partial[static_cast<std::size_t>(t)] = scan_range(g, j, lo, hi); });
    }
    for (std::thread& th : pool) {
      th.join();
    }
    for (const ScanBest& p : partial) {
      if (p.weight < best.weight || (p.weight == best.weight && p.rank < best.rank)) {
        best = p;
      }
    }
  }

  SizeEntry entry;
  entry.min_weight = best.weight;
  entry.witness = best.subset;
  entry.word = subset_product(g, best.subset);
  return entry;
}

}  // namespace detail

/// Exhaustively enumerates all generator subsets of sizes 1..k (size-major,
/// lexicographic within each size) and tabulates the minimum product weight
/// per size. Throws budget_error if the enumeration would exceed the budget.
inline ProductWeightTable min_weight_products(const Graph& g, int k,
                                              const EnumerationOptions& opts = {}) {
  const std::size_t n = g.num_vertices();
  if (n == 0) {
    throw std::invalid_argument("min_weight_products: graph is empty");
  }
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("min_weight_products: size bound k out of range");
  }
  std::uint64_t required = 0;
  for (int j = 1; j <= k; ++j) {
    const std::uint64_t c = binomial(n, static_cast<std::uint64_t>(j));
    required = (required > std::numeric_limits<std::uint64_t>::max() - c)
                   ? std::numeric_limits<std::uint64_t>::max()
                   : required + c;
  }
  if (required > opts.budget) {
    throw budget_error("enumeration needs " + std::to_string(required) +
                           " subsets, over budget " + std::to_string(opts.budget),
                       required);
  }

  ProductWeightTable table;
  table.n = n;
  table.k_max_searched = k;
  for (int j = 1; j <= k; ++j) {
    table.by_size[j] = detail::scan_size(g, j, opts.threads);
  }
  return table;
}

struct BreakingWitness {
  std::vector<int> subset;
  PauliWord word;
  int weight = 0;
};

/// Certified uniformity of a graph state. `uniformity` is the largest k
/// (capped at floor(n/2)) with no nonidentity stabilizer element of weight
/// <= k; `exact` means failure at k+1 was exhibited or the cap was reached.
struct UniformityReport {
  std::size_t n = 0;
  int uniformity = 0;
  bool exact = false;
  bool ame = false;
  bool truncated = false;
  ProductWeightTable table;
  std::optional<BreakingWitness> breaking;
  std::optional<int> decided_k;           // set when a target k was requested
  std::optional<bool> decided_uniform;    // verdict for that target
};

/// Decides k_target-uniformity when a target is given, otherwise searches
/// upward for the exact uniformity, stopping at floor(n/2) or at the subset
/// budget (the report is then a truncated lower bound).
inline UniformityReport certify_uniformity(const Graph& g, std::optional<int> k_target = {},
                                           const EnumerationOptions& opts = {}) {
  const std::size_t n = g.num_vertices();
  if (n == 0) {
    throw std::invalid_argument("certify_uniformity: graph is empty");
  }
  const int k_cap = static_cast<int>(n / 2);
  if (k_target && (*k_target < 1 || *k_target > k_cap)) {
    throw std::invalid_argument("certify_uniformity: k must be in [1, " +
                                std::to_string(k_cap) + "] for n=" + std::to_string(n));
  }
  const int limit = k_target ? *k_target : k_cap;

  UniformityReport report;
  report.n = n;
  report.table.n = n;
  report.decided_k = k_target;

  if (k_target) {
    // The decision needs every size <= k_target; reject up front if the
    // budget cannot cover them.
    std::uint64_t required = 0;
    for (int j = 1; j <= limit; ++j) {
      const std::uint64_t c = binomial(n, static_cast<std::uint64_t>(j));
      required = (required > std::numeric_limits<std::uint64_t>::max() - c)
                     ? std::numeric_limits<std::uint64_t>::max()
                     : required + c;
    }
    if (required > opts.budget) {
      throw budget_error("deciding " + std::to_string(limit) + "-uniformity needs " +
                             std::to_string(required) + " subsets, over budget " +
                             std::to_string(opts.budget),
                         required);
    }
  }

  std::uint64_t spent = 0;
  int running_min = std::numeric_limits<int>::max();
  for (int j = 1; j <= limit; ++j) {
    const std::uint64_t cost = binomial(n, static_cast<std::uint64_t>(j));
    if (cost > opts.budget - spent) {
      report.truncated = true;
      break;
    }
    spent += cost;
    report.table.by_size[j] = detail::scan_size(g, j, opts.threads);
    report.table.k_max_searched = j;
    running_min = std::min(running_min, report.table.by_size[j].min_weight);

    if (running_min <= j) {
      // A stabilizer element of weight j exists (running_min == j by the
      // weight >= size bound), so uniformity is exactly j-1. The witness
      // comes from the largest size attaining that weight, i.e. a size-j
      // product when one exists.
      report.uniformity = j - 1;
      report.exact = true;
      for (auto it = report.table.by_size.rbegin(); it != report.table.by_size.rend(); ++it) {
        if (it->second.min_weight == running_min) {
          report.breaking =
              BreakingWitness{it->second.witness, it->second.word, it->second.min_weight};
          break;
        }
      }
      report.ame = false;
      if (k_target) {
        report.decided_uniform = false;
      }
      return report;
    }
  }

  // No element of weight <= limit found among the searched sizes.
  if (report.truncated) {
    report.uniformity = report.table.k_max_searched;
    report.exact = false;
  } else if (limit == k_cap) {
    report.uniformity = k_cap;
    report.exact = true;  // the floor(n/2) ceiling
  } else {
    report.uniformity = limit;
    report.exact = false;
  }
  report.ame = !report.truncated && report.uniformity == k_cap && report.uniformity >= 1;
  if (k_target && !report.truncated) {
    report.decided_uniform = true;
  }
  return report;
}

/// Certificate that the state is not (uniformity+1)-uniform: a generator
/// subset whose product has weight uniformity+1 (none for AME states).
inline std::optional<std::pair<std::vector<int>, PauliWord>> breaking_witness(
    const UniformityReport& report) {
  if (!report.breaking) {
    return std::nullopt;
  }
  return std::make_pair(report.breaking->subset, report.breaking->word);
}

}  // namespace kuniform
