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

// End-to-end acceptance suite: one test per guaranteed behavior, each with
// its tolerance pinned in the assertions.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kuniform/circuit.hpp"
#include "kuniform/cli.hpp"
#include "kuniform/dense.hpp"
#include "kuniform/graph.hpp"
#include "kuniform/uniformity.hpp"
#include "test_util.hpp"

namespace kuniform {
namespace {

double max_amplitude_diff(const DenseState& a, const DenseState& b) {
  double dev = 0;
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    dev = std::max(dev, std::abs(a.amplitude(i) - b.amplitude(i)));
  }
  return dev;
}

// The expand subcommand reproduces the claw graph state's full signed
// expansion: exactly sixteen terms, signs included.
TEST(Acceptance, ClawExpansionSixteenSignedTerms) {
  std::istringstream in(R"({"n":4,"edges":[[0,1],[1,2],[1,3]]})");
  std::ostringstream out, err;
  const int code = cli::run({"expand", "--graph", "-"}, in, out, err);
  ASSERT_EQ(code, 0) << err.str();

  std::set<std::string> got;
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line)) {
    got.insert(line);
  }
  const auto expected = test::claw_expansion();
  EXPECT_EQ(got, std::set<std::string>(expected.begin(), expected.end()));
}

// Complete graphs (GHZ class) of 2..8 qubits are exactly 1-uniform, with a
// weight-2 two-product as the witness.
TEST(Acceptance, CompleteGraphsExactlyOneUniform) {
  for (int n = 2; n <= 8; ++n) {
    const Graph g = make_complete(n);
    const UniformityReport report = certify_uniformity(g);
    EXPECT_EQ(report.uniformity, 1) << "n=" << n;
    EXPECT_TRUE(report.exact) << "n=" << n;
    EXPECT_EQ(subset_product(g, {0, 1}).weight(), 2u) << "n=" << n;
    if (n >= 4) {
      ASSERT_TRUE(report.breaking.has_value()) << "n=" << n;
      EXPECT_EQ(report.breaking->subset.size(), 2u);
      EXPECT_EQ(report.breaking->weight, 2);
    }
  }
}

// Cycles of 5..12 qubits are exactly 2-uniform; the 4-cycle is exactly
// 1-uniform with a weight-2 pair witness; the 5-cycle hits the floor(n/2)
// ceiling and is flagged absolutely maximally entangled.
TEST(Acceptance, CyclesExactlyTwoUniform) {
  for (int n = 5; n <= 12; ++n) {
    const UniformityReport report = certify_uniformity(make_cycle(n));
    EXPECT_EQ(report.uniformity, 2) << "n=" << n;
    EXPECT_TRUE(report.exact) << "n=" << n;
  }

  const UniformityReport c4 = certify_uniformity(make_cycle(4));
  EXPECT_EQ(c4.uniformity, 1);
  EXPECT_TRUE(c4.exact);
  ASSERT_TRUE(c4.breaking.has_value());
  EXPECT_EQ(c4.breaking->subset.size(), 2u);
  EXPECT_EQ(c4.breaking->weight, 2);

  EXPECT_TRUE(certify_uniformity(make_cycle(5)).ame);
}

// Bilayer graphs with layer sizes 3..6 are exactly 3-uniform; the per-size
// minima follow (n+1, 4, n+1) and the seven characteristic products have
// weights (n+1, 4, 2n, 2n-2, n+3, n+1, n+1).
TEST(Acceptance, BilayersExactlyThreeUniform) {
  for (int n = 3; n <= 6; ++n) {
    const Graph g = make_bilayer(n);
    const UniformityReport report = certify_uniformity(g);
    EXPECT_EQ(report.uniformity, 3) << "layer=" << n;
    EXPECT_TRUE(report.exact) << "layer=" << n;

    const ProductWeightTable table = min_weight_products(g, 3);
    EXPECT_EQ(table.by_size.at(1).min_weight, n + 1);
    EXPECT_EQ(table.by_size.at(2).min_weight, 4);
    EXPECT_EQ(table.by_size.at(3).min_weight, n + 1);

    const auto product_weight = [&](const std::vector<int>& subset) {
      return static_cast<int>(subset_product(g, subset).weight());
    };
    EXPECT_EQ(product_weight({0}), n + 1);
    EXPECT_EQ(product_weight({0, 1}), 4);          // same layer
    EXPECT_EQ(product_weight({0, n}), 2 * n);      // matched across layers
    EXPECT_EQ(product_weight({0, n + 1}), 2 * n - 2);  // unmatched across layers
    EXPECT_EQ(product_weight({0, 1, 2}), n + 3);   // all in one layer
    EXPECT_EQ(product_weight({0, 1, n}), n + 1);   // third matched to one of the pair
    EXPECT_EQ(product_weight({0, 1, n + 2}), n + 1);  // third matched elsewhere
  }
}

// The 5x5 torus has minimum k-product weights k+4 for k = 1..4 (so it is at
// least 4-uniform), a weight-5 product on the length-5 diagonal, and the
// smaller tori fail 4-uniformity.
TEST(Acceptance, TorusMinWeightsAndSmallTorusFailures) {
  const Graph torus5 = make_torus(5, 5);
  const ProductWeightTable table = min_weight_products(torus5, 4);
  EXPECT_EQ(table.by_size.at(1).min_weight, 5);
  EXPECT_EQ(table.by_size.at(2).min_weight, 6);
  EXPECT_EQ(table.by_size.at(3).min_weight, 7);
  EXPECT_EQ(table.by_size.at(4).min_weight, 8);

  const PauliWord diagonal = subset_product(torus5, {0, 6, 12, 18, 24});
  EXPECT_EQ(diagonal.weight(), 5u);

  const Graph torus3 = make_torus(3, 3);
  const UniformityReport r3 = certify_uniformity(torus3, 4);
  ASSERT_TRUE(r3.decided_uniform.has_value());
  EXPECT_FALSE(*r3.decided_uniform);
  EXPECT_FALSE(verify_uniformity_dense(torus3, 4, 1e-10).uniform);

  const Graph torus4 = make_torus(4, 4);
  const UniformityReport r4 = certify_uniformity(torus4, 4);
  ASSERT_TRUE(r4.decided_uniform.has_value());
  EXPECT_FALSE(*r4.decided_uniform);
  EXPECT_FALSE(verify_uniformity_cutrank(torus4, 4).uniform);
}

// Stabilizer certification, the dense reduced-density-matrix scan (tolerance
// 1e-10) and the cut-rank oracle agree on every k for 200 random graphs.
TEST(Acceptance, OracleEquivalenceOnRandomGraphs) {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = test::random_graph(rng, n, 0.5);
    const UniformityReport report = certify_uniformity(g);
    ASSERT_TRUE(report.exact);
    ASSERT_FALSE(report.truncated);
    for (int k = 1; k <= static_cast<int>(g.num_vertices() / 2); ++k) {
      const bool stabilizer = k <= report.uniformity;
      const bool dense = verify_uniformity_dense(g, k, 1e-10).uniform;
      const bool cutrank = verify_uniformity_cutrank(g, k).uniform;
      EXPECT_EQ(stabilizer, dense) << "trial=" << trial << " n=" << n << " k=" << k;
      EXPECT_EQ(stabilizer, cutrank) << "trial=" << trial << " n=" << n << " k=" << k;
    }
  }
}

// Product weight never drops below the subset size (10^4 random pairs).
TEST(Acceptance, ProductWeightNeverBelowSubsetSize) {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = test::random_graph(rng, n, 0.5);
    const int size = 1 + static_cast<int>(rng() % n);
    const auto subset = test::random_subset(rng, n, size);
    ASSERT_GE(subset_product(g, subset).weight(), static_cast<std::size_t>(size))
        << "trial=" << trial;
  }
}

// Simulating the emitted preparation circuit reproduces the directly
// constructed state to 1e-12 for every family graph with up to 10 qubits.
TEST(Acceptance, CircuitRoundTripOnFamilyGraphs) {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 10; ++n) {
    graphs.push_back(make_matching(n));
    graphs.push_back(make_complete(n));
  }
  for (int n = 3; n <= 10; ++n) {
    graphs.push_back(make_cycle(n));
  }
  for (int layer = 2; layer <= 5; ++layer) {
    graphs.push_back(make_bilayer(layer));
  }
  graphs.push_back(make_torus(3, 3));

  for (const Graph& g : graphs) {
    EXPECT_LT(max_amplitude_diff(simulate_circuit(emit_circuit(g)), build_state(g)), 1e-12)
        << "n=" << g.num_vertices() << " edges=" << g.num_edges();
  }
}

}  // namespace
}  // namespace kuniform
