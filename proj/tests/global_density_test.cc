// Copyright 2026 The locdense Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "locdense/bipartite_graph.h"
#include "locdense/error.h"
#include "locdense/global_density.h"
#include "locdense/oracle.h"
#include "test_util.h"

namespace locdense {
namespace {

using ::locdense::testing::Complete;
using ::locdense::testing::NaiveDensest;
using ::locdense::testing::RandomGraph;

TEST(GlobalScheduleTest, Horizon) {
  for (std::size_t n : {2u, 4u, 5u, 16u, 17u, 1000u, 1000000u}) {
    GlobalSchedule s = GlobalSchedule::For(n);
    EXPECT_GE(std::ldexp(1.0, s.horizon), 2.0 * std::sqrt(double(n)));
    EXPECT_LT(std::ldexp(1.0, s.horizon - 1), 2.0 * std::sqrt(double(n)));
    EXPECT_GE(s.epsilons.back(), 0.25);
    EXPECT_LE(s.epsilons.back(), 1.0);
    for (std::size_t t = 1; t < s.epsilons.size(); ++t) {
      EXPECT_GT(s.epsilons[t], s.epsilons[t - 1]);
    }
  }
}

TEST(GlobalDensityTest, CompleteTwoByThree) {
  BipartiteGraph g = Complete(2, 3);
  DensityResult r = GlobalDensity(g, true);
  EXPECT_NEAR(r.subgraph.density(), std::sqrt(6.0), 1e-12);
  EXPECT_EQ(r.found_at.t, 0);
  EXPECT_EQ(r.start_side, Side::kLeft);
  ASSERT_EQ(r.traces.size(), 2u);
  EXPECT_EQ(r.traces[0].start_side, Side::kLeft);
  EXPECT_EQ(r.traces[1].start_side, Side::kRight);
}

TEST(GlobalDensityTest, SingleEdge) {
  std::vector<Edge> edges = {{"u", "v", 1.0}};
  EXPECT_DOUBLE_EQ(GlobalDensity(BipartiteGraph::Build(edges)).subgraph.density(),
                   1.0);
}

TEST(GlobalDensityTest, BlockAmongSingleEdges) {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      edges.push_back({"k" + std::to_string(i), "m" + std::to_string(j), 1.0});
    }
  }
  for (int i = 0; i < 12; ++i) {
    edges.push_back({"s" + std::to_string(i), "t" + std::to_string(i), 1.0});
  }
  BipartiteGraph g = BipartiteGraph::Build(edges);
  DensityResult r = GlobalDensity(g);
  EXPECT_NEAR(r.subgraph.density(), 3.0, 1e-12);
  EXPECT_NEAR(ExactDensest(g).density(), 3.0, 1e-12);
  EXPECT_EQ(r.subgraph.left().size(), 3u);
}

TEST(GlobalDensityTest, BoundExamples) {
  EXPECT_NEAR(GlobalGuaranteeBound(std::sqrt(6.0), 5), 0.1417, 5e-5);
  EXPECT_DOUBLE_EQ(GlobalGuaranteeBound(12.0, 4), 0.75);
  try {
    GlobalGuaranteeBound(1.0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainError);
  }
}

TEST(GlobalDensityTest, GuaranteeAndSanityOnRandomGraphs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    BipartiteGraph g = RandomGraph(rng, 3 + trial % 6, 2 + trial % 7, 0.4,
                                   trial % 2 == 1);
    DensityResult r = GlobalDensity(g);
    EigenEstimate eig = TopEigenvalue(g);
    double d = r.subgraph.density();
    EXPECT_GE(d, GlobalGuaranteeBound(eig.value, g.vertex_count()));
    EXPECT_LE(d, (eig.value + eig.residual) * (1 + 1e-12));
    EXPECT_LE(d, NaiveDensest(g).density * (1 + 1e-12));
  }
}

}  // namespace
}  // namespace locdense
