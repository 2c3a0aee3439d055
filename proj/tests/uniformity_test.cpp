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

#include "kuniform/uniformity.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "kuniform/report_io.hpp"
#include "test_util.hpp"

namespace kuniform {
namespace {

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(25, 4), 12650u);
  EXPECT_EQ(binomial(4, 5), 0u);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(Combinatorics, UnrankMatchesIteration) {
  std::vector<int> comb{0, 1, 2};
  std::uint64_t rank = 0;
  do {
    EXPECT_EQ(unrank_combination(8, 3, rank), comb);
    ++rank;
  } while (next_combination(comb, 8));
  EXPECT_EQ(rank, binomial(8, 3));
}

TEST(SubsetProduct, Examples) {
  const Graph k4 = make_complete(4);
  const PauliWord two = subset_product(k4, {0, 1});
  EXPECT_EQ(two.str(), "+YYII");
  EXPECT_EQ(two.weight(), 2u);

  const Graph c5 = make_cycle(5);
  EXPECT_EQ(subset_product(c5, {0, 1}).str(), "+YYZIZ");
  EXPECT_EQ(subset_product(c5, {0, 1}).weight(), 4u);

  EXPECT_EQ(subset_product(c5, {3}), correlation_operator(c5, 3));
}

TEST(SubsetProduct, Validation) {
  const Graph c5 = make_cycle(5);
  EXPECT_THROW(subset_product(c5, {}), std::invalid_argument);
  EXPECT_THROW(subset_product(c5, {0, 5}), std::invalid_argument);
  EXPECT_THROW(subset_product(c5, {1, 1}), std::invalid_argument);
}

TEST(SubsetProduct, SupportIdentity) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = test::random_graph(rng, n, 0.5);
    const int size = 1 + static_cast<int>(rng() % n);
    const auto subset = test::random_subset(rng, n, size);
    const PauliWord p = subset_product(g, subset);
    BitVec x = bitvec_from_indices(g.num_vertices(), subset);
    BitVec z(g.num_vertices());
    for (int v : subset) {
      z ^= g.neighborhood(static_cast<std::size_t>(v));
    }
    EXPECT_EQ(p.x_bits(), x);
    EXPECT_EQ(p.z_bits(), z);
    EXPECT_EQ(p.weight(), (x | z).count());
    // Real +/- coefficient: stabilizer elements are Hermitian.
    EXPECT_TRUE(p.phase_exp() == 0 || p.phase_exp() == 2);
  }
}

TEST(MinWeightProducts, CycleFour) {
  const ProductWeightTable table = min_weight_products(make_cycle(4), 2);
  EXPECT_EQ(table.by_size.at(1).min_weight, 3);
  EXPECT_EQ(table.by_size.at(2).min_weight, 2);
  EXPECT_EQ(table.by_size.at(2).witness, (std::vector<int>{0, 2}));
  EXPECT_EQ(table.by_size.at(2).word.str(), "+XIXI");
}

TEST(MinWeightProducts, CycleFive) {
  const ProductWeightTable table = min_weight_products(make_cycle(5), 2);
  EXPECT_EQ(table.by_size.at(1).min_weight, 3);
  EXPECT_EQ(table.by_size.at(2).min_weight, 4);
  EXPECT_EQ(table.by_size.at(1).witness, (std::vector<int>{0}));
  EXPECT_EQ(table.by_size.at(2).witness, (std::vector<int>{0, 1}));
}

TEST(MinWeightProducts, BilayerThree) {
  const ProductWeightTable table = min_weight_products(make_bilayer(3), 3);
  EXPECT_EQ(table.by_size.at(1).min_weight, 4);
  EXPECT_EQ(table.by_size.at(2).min_weight, 4);
  EXPECT_EQ(table.by_size.at(3).min_weight, 4);
}

TEST(MinWeightProducts, BudgetExceeded) {
  EnumerationOptions opts;
  opts.budget = 100;
  try {
    min_weight_products(make_cycle(12), 6, opts);
    FAIL() << "expected budget_error";
  } catch (const budget_error& e) {
    EXPECT_EQ(e.required(), 2509u);  // sum of C(12, 1..6)
  }
}

TEST(Certify, CycleFive) {
  const UniformityReport report = certify_uniformity(make_cycle(5));
  EXPECT_EQ(report.uniformity, 2);
  EXPECT_TRUE(report.exact);
  EXPECT_TRUE(report.ame);
  EXPECT_FALSE(report.truncated);
  EXPECT_FALSE(report.breaking.has_value());
  EXPECT_EQ(breaking_witness(report), std::nullopt);
}

TEST(Certify, CycleFour) {
  const UniformityReport report = certify_uniformity(make_cycle(4));
  EXPECT_EQ(report.uniformity, 1);
  EXPECT_TRUE(report.exact);
  EXPECT_FALSE(report.ame);
  ASSERT_TRUE(report.breaking.has_value());
  EXPECT_EQ(report.breaking->subset, (std::vector<int>{0, 2}));
  EXPECT_EQ(report.breaking->word.str(), "+XIXI");
  EXPECT_EQ(report.breaking->weight, 2);
}

TEST(Certify, CycleFourDecision) {
  const UniformityReport report = certify_uniformity(make_cycle(4), 2);
  ASSERT_TRUE(report.decided_uniform.has_value());
  EXPECT_FALSE(*report.decided_uniform);
  EXPECT_EQ(report.uniformity, 1);
  EXPECT_TRUE(report.exact);
}

TEST(Certify, CycleSixBreakingTriple) {
  const UniformityReport report = certify_uniformity(make_cycle(6));
  EXPECT_EQ(report.uniformity, 2);
  EXPECT_TRUE(report.exact);
  ASSERT_TRUE(report.breaking.has_value());
  EXPECT_EQ(report.breaking->subset, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(report.breaking->word.str(), "+XIXIXI");
}

TEST(Certify, EdgelessGraphs) {
  const UniformityReport two = certify_uniformity(Graph(2));
  EXPECT_EQ(two.uniformity, 0);
  EXPECT_TRUE(two.exact);
  EXPECT_FALSE(two.ame);
  ASSERT_TRUE(two.breaking.has_value());
  EXPECT_EQ(two.breaking->subset, (std::vector<int>{0}));
  EXPECT_EQ(two.breaking->weight, 1);

  const UniformityReport one = certify_uniformity(Graph(1));
  EXPECT_EQ(one.uniformity, 0);
  EXPECT_TRUE(one.exact);
  EXPECT_FALSE(one.ame);
}

TEST(Certify, CompleteGraphsExactlyOneUniform) {
  for (int n = 4; n <= 8; ++n) {
    const UniformityReport report = certify_uniformity(make_complete(n));
    EXPECT_EQ(report.uniformity, 1) << "n=" << n;
    EXPECT_TRUE(report.exact);
    ASSERT_TRUE(report.breaking.has_value());
    EXPECT_EQ(report.breaking->subset, (std::vector<int>{0, 1}));
    EXPECT_EQ(report.breaking->weight, 2);
  }
}

TEST(Certify, MatchingGraphsExactlyOneUniform) {
  for (int n = 2; n <= 10; ++n) {
    const UniformityReport report = certify_uniformity(make_matching(n));
    EXPECT_EQ(report.uniformity, 1) << "n=" << n;
    EXPECT_TRUE(report.exact);
    EXPECT_EQ(report.ame, n <= 3);
  }
}

TEST(Certify, BellPairIsAme) {
  const UniformityReport report = certify_uniformity(make_matching(2));
  EXPECT_EQ(report.uniformity, 1);
  EXPECT_TRUE(report.ame);
}

TEST(Certify, ValidationErrors) {
  EXPECT_THROW(certify_uniformity(Graph(0)), std::invalid_argument);
  EXPECT_THROW(certify_uniformity(make_cycle(4), 0), std::invalid_argument);
  EXPECT_THROW(certify_uniformity(make_cycle(4), 3), std::invalid_argument);
}

TEST(Certify, DecisionBudgetThrows) {
  EnumerationOptions opts;
  opts.budget = 10;
  EXPECT_THROW(certify_uniformity(make_cycle(12), 3, opts), budget_error);
}

TEST(Certify, AutoSearchTruncatesAtBudget) {
  EnumerationOptions opts;
  opts.budget = 78;  // covers sizes 1 and 2 of a 12-cycle, not size 3
  const UniformityReport report = certify_uniformity(make_cycle(12), std::nullopt, opts);
  EXPECT_TRUE(report.truncated);
  EXPECT_FALSE(report.exact);
  EXPECT_EQ(report.uniformity, 2);
  EXPECT_EQ(report.table.k_max_searched, 2);
}

TEST(Certify, MonotoneDecisions) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = test::random_graph(rng, n, 0.5);
    const UniformityReport full = certify_uniformity(g);
    for (int k = 1; k <= static_cast<int>(g.num_vertices() / 2); ++k) {
      const UniformityReport decided = certify_uniformity(g, k);
      ASSERT_TRUE(decided.decided_uniform.has_value());
      EXPECT_EQ(*decided.decided_uniform, k <= full.uniformity)
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Certify, WeightLowerBoundProperty) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = test::random_graph(rng, n, 0.5);
    const int size = 1 + static_cast<int>(rng() % n);
    const auto subset = test::random_subset(rng, n, size);
    EXPECT_GE(subset_product(g, subset).weight(), static_cast<std::size_t>(size));
  }
}

TEST(Certify, DeterministicAcrossThreadCounts) {
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions four;
  four.threads = 4;
  const Graph torus = make_torus(5, 5);
  EXPECT_EQ(to_json(certify_uniformity(torus, std::nullopt, one)).dump(),
            to_json(certify_uniformity(torus, std::nullopt, four)).dump());

  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 6);
    const Graph g = test::random_graph(rng, n, 0.5);
    EXPECT_EQ(to_json(certify_uniformity(g, std::nullopt, one)).dump(),
              to_json(certify_uniformity(g, std::nullopt, four)).dump());
  }
}

TEST(ReportJson, CycleFiveGolden) {
  const UniformityReport report = certify_uniformity(make_cycle(5));
  EXPECT_EQ(to_json(report).dump(),
            R"({"n":5,"uniformity":2,"exact":true,"ame":true,)"
            R"("min_weights":{"1":3,"2":4},)"
            R"("witnesses":{"1":{"subset":[0],"pauli":"+XZIIZ"},)"
            R"("2":{"subset":[0,1],"pauli":"+YYZIZ"}},)"
            R"("breaking_witness":null,"truncated":false})");
}

}  // namespace
}  // namespace kuniform
