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

#ifndef LOCDENSE_DENSITY_H_
#define LOCDENSE_DENSITY_H_

#include <span>
#include <vector>

#include "locdense/bipartite_graph.h"

namespace locdense {

// Sorted, duplicate-free.
using VertexSet = std::vector<Vertex>;

VertexSet MakeVertexSet(std::span<const Vertex> vertices);

// A pair (S, T) with S on the left side and T on the right side, both
// nonempty, together with e(S, T) and d(S, T) = e(S, T) / sqrt(|S| |T|).
class Subgraph {
 public:
  // Recomputes e(S, T) from the graph. Throws kEmptySide, kSideViolation.
  static Subgraph Of(const BipartiteGraph& g, std::span<const Vertex> left,
                     std::span<const Vertex> right);

  const VertexSet& left() const { return left_; }
  const VertexSet& right() const { return right_; }
  double edge_weight() const { return edge_weight_; }
  double density() const { return density_; }

  friend bool operator==(const Subgraph&, const Subgraph&) = default;

 private:
  Subgraph(VertexSet left, VertexSet right, double edge_weight);

  VertexSet left_;
  VertexSet right_;
  double edge_weight_;
  double density_;
};

// e(S, T): total weight of edges with one endpoint in S and one in T. Walks
// the adjacency lists of whichever set has the smaller total fanout.
// Throws kSideViolation if S is not within L or T is not within R.
double EdgeWeightBetween(const BipartiteGraph& g, std::span<const Vertex> left,
                         std::span<const Vertex> right);

inline Subgraph Density(const BipartiteGraph& g, std::span<const Vertex> left,
                        std::span<const Vertex> right) {
  return Subgraph::Of(g, left, right);
}

// e(S, T) / (|S| + |T|), for comparison with d. Throws kEmptySide only when
// both sets are empty.
double RatioDensity(const BipartiteGraph& g, std::span<const Vertex> left,
                    std::span<const Vertex> right);

// The induced subgraph on S u T with only S x T edges. Vertex indices and
// ids are unchanged. Throws kEmptyGraph if no edge survives.
BipartiteGraph Restrict(const BipartiteGraph& g, std::span<const Vertex> left,
                        std::span<const Vertex> right);

DegreeStats GetDegreeStats(const BipartiteGraph& g);

}  // namespace locdense

#endif  // LOCDENSE_DENSITY_H_
