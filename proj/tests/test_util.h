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

// Brute-force helpers shared by the unit and acceptance tests. Everything in
// here is written against dense matrices so it does not reuse any of the
// library's sparse machinery.

#ifndef LOCDENSE_TESTS_TEST_UTIL_H_
#define LOCDENSE_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locdense/bipartite_graph.h"

namespace locdense::testing {

using Matrix = std::vector<std::vector<double>>;

inline BipartiteGraph Complete(int a, int b, double weight = 1.0) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      edges.push_back(
          {"l" + std::to_string(i), "r" + std::to_string(j), weight});
    }
  }
  return BipartiteGraph::Build(edges);
}

// Random bipartite graph with exactly `a` left and `b` right vertices (every
// vertex is declared, isolated ones through zero-weight edges).
inline BipartiteGraph RandomGraph(std::mt19937_64& rng, int a, int b,
                                  double p, bool weighted) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> small_weight(1, 4);
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      double w = 0.0;
      if (coin(rng) < p) w = weighted ? small_weight(rng) * 0.5 : 1.0;
      if (w > 0.0 || i == j || i == a - 1 || j == b - 1) {
        edges.push_back({"l" + std::to_string(i), "r" + std::to_string(j), w});
      }
    }
  }
  // Guarantee at least one positive edge.
  edges.push_back({"l0", "r0", 1.0});
  return BipartiteGraph::Build(edges);
}

inline Matrix DenseAdjacency(const BipartiteGraph& g) {
  std::size_t n = g.vertex_count();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const auto& [u, v, w] : g.Edges()) {
    a[u][v] += w;
    a[v][u] += w;
  }
  return a;
}

struct NaiveBest {
  double density = 0.0;
  std::uint64_t left_mask = 0;
  std::uint64_t right_mask = 0;
};

// Enumerates every pair of nonempty subsets (S, T).
inline NaiveBest NaiveDensest(const BipartiteGraph& g) {
  Matrix a = DenseAdjacency(g);
  std::size_t nl = g.left_count();
  std::size_t nr = g.right_count();
  NaiveBest best;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << nl); ++s) {
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << nr); ++t) {
      double e = 0.0;
      int cs = 0;
      int ct = 0;
      for (std::size_t i = 0; i < nl; ++i) {
        if (!((s >> i) & 1)) continue;
        ++cs;
        for (std::size_t j = 0; j < nr; ++j) {
          if ((t >> j) & 1) e += a[i][nl + j];
        }
      }
      for (std::size_t j = 0; j < nr; ++j) ct += (t >> j) & 1;
      double d = e / std::sqrt(double(cs) * double(ct));
      if (d > best.density) best = {d, s, t};
    }
  }
  return best;
}

// Smallest power of two >= z, by repeated doubling and halving.
inline double NaiveRoundUp(double z) {
  double p = 1.0;
  while (p < z) p *= 2.0;
  while (p / 2.0 >= z) p /= 2.0;
  return p;
}

inline double Norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// One step of the pruned process on dense vectors.
inline std::vector<double> DenseStep(const Matrix& a,
                                     const std::vector<double>& x,
                                     double epsilon) {
  std::size_t n = a.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) y[w] += x[u] * a[u][w];
  }
  for (double& v : y) {
    if (v > 0.0) v = NaiveRoundUp(v);
  }
  double cut = epsilon * Norm(y);
  for (double& v : y) {
    if (!(v > cut)) v = 0.0;
  }
  return y;
}

}  // namespace locdense::testing

#endif  // LOCDENSE_TESTS_TEST_UTIL_H_
