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

#include "locdense/density.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "locdense/error.h"

namespace locdense {
namespace {

void CheckSide(const BipartiteGraph& g, std::span<const Vertex> set,
               Side side) {
  for (Vertex v : set) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::kUnknownVertex,
                  "vertex index " + std::to_string(v) + " out of range");
    }
    if (g.side(v) != side) {
      throw Error(ErrorCode::kSideViolation,
                  "vertex " + g.id(v) + " is not on side " +
                      std::string(SideName(side)));
    }
  }
}

std::size_t TotalFanout(const BipartiteGraph& g, const VertexSet& set) {
  std::size_t total = 0;
  for (Vertex v : set) total += g.fanout(v);
  return total;
}

double SortedEdgeWeight(const BipartiteGraph& g, const VertexSet& left,
                        const VertexSet& right) {
  const bool walk_left = TotalFanout(g, left) <= TotalFanout(g, right);
  const VertexSet& walk = walk_left ? left : right;
  const VertexSet& probe = walk_left ? right : left;
  double total = 0.0;
  for (Vertex u : walk) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (std::binary_search(probe.begin(), probe.end(), nb.vertex)) {
        total += nb.weight;
      }
    }
  }
  return total;
}

}  // namespace

VertexSet MakeVertexSet(std::span<const Vertex> vertices) {
  VertexSet set(vertices.begin(), vertices.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

Subgraph::Subgraph(VertexSet left, VertexSet right, double edge_weight)
    : left_(std::move(left)),
      right_(std::move(right)),
      edge_weight_(edge_weight),
      density_(edge_weight /
               std::sqrt(static_cast<double>(left_.size()) *
                         static_cast<double>(right_.size()))) {}

Subgraph Subgraph::Of(const BipartiteGraph& g, std::span<const Vertex> left,
                      std::span<const Vertex> right) {
  if (left.empty() || right.empty()) {
    throw Error(ErrorCode::kEmptySide, "density needs two nonempty sides");
  }
  CheckSide(g, left, Side::kLeft);
  CheckSide(g, right, Side::kRight);
  VertexSet s = MakeVertexSet(left);
  VertexSet t = MakeVertexSet(right);
  const double e = SortedEdgeWeight(g, s, t);
  return Subgraph(std::move(s), std::move(t), e);
}

double EdgeWeightBetween(const BipartiteGraph& g, std::span<const Vertex> left,
                         std::span<const Vertex> right) {
  CheckSide(g, left, Side::kLeft);
  CheckSide(g, right, Side::kRight);
  if (left.empty() || right.empty()) return 0.0;
  return SortedEdgeWeight(g, MakeVertexSet(left), MakeVertexSet(right));
}

double RatioDensity(const BipartiteGraph& g, std::span<const Vertex> left,
                    std::span<const Vertex> right) {
  const double e = EdgeWeightBetween(g, left, right);
  const std::size_t size =
      MakeVertexSet(left).size() + MakeVertexSet(right).size();
  if (size == 0) {
    throw Error(ErrorCode::kEmptySide, "ratio density of an empty subgraph");
  }
  return e / static_cast<double>(size);
}

BipartiteGraph Restrict(const BipartiteGraph& g, std::span<const Vertex> left,
                        std::span<const Vertex> right) {
  CheckSide(g, left, Side::kLeft);
  CheckSide(g, right, Side::kRight);
  std::vector<bool> keep(g.vertex_count(), false);
  for (Vertex v : left) keep[v] = true;
  for (Vertex v : right) keep[v] = true;
  return g.FilterEdges(keep);
}

DegreeStats GetDegreeStats(const BipartiteGraph& g) {
  DegreeStats stats;
  stats.vertex_count = g.vertex_count();
  stats.edge_count = g.edge_count();
  stats.total_weight = g.total_weight();
  stats.max_degree = g.max_degree();
  stats.max_fanout = g.max_fanout();
  stats.average_degree =
      2.0 * g.total_weight() / static_cast<double>(g.vertex_count());
  return stats;
}

}  // namespace locdense
