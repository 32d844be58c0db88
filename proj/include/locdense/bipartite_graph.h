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

#ifndef LOCDENSE_BIPARTITE_GRAPH_H_
#define LOCDENSE_BIPARTITE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace locdense {

// Vertices share one dense index space: left vertices occupy
// [0, left_count) and right vertices occupy [left_count, vertex_count).
using Vertex = std::uint32_t;

enum class Side : std::uint8_t { kLeft, kRight };

inline Side Opposite(Side side) {
  return side == Side::kLeft ? Side::kRight : Side::kLeft;
}

std::string_view SideName(Side side);

// An input edge keyed by external ids. For directed input `left` is the
// source and `right` the destination.
struct Edge {
  std::string left;
  std::string right;
  double weight = 1.0;
};

// An edge keyed by per-side local indices (0-based within its side).
struct IndexedEdge {
  std::uint32_t left;
  std::uint32_t right;
  double weight = 1.0;
};

struct Neighbor {
  Vertex vertex;
  double weight;
};

struct DegreeStats {
  std::size_t vertex_count = 0;  // n
  std::size_t edge_count = 0;    // distinct (u, v) pairs
  double total_weight = 0.0;     // m
  double max_degree = 0.0;       // weighted, used in approximation bounds
  std::size_t max_fanout = 0;    // neighbor count, used in work accounting
  double average_degree = 0.0;   // 2m / n
};

// Immutable weighted bipartite graph in CSR form. Adjacency is mirrored:
// every edge appears in the lists of both endpoints, and each list is sorted
// by neighbor index. Copies share the id tables.
class BipartiteGraph {
 public:
  // Duplicate pairs are merged by summing weights; pairs whose merged weight
  // is zero are dropped, but their endpoints remain as isolated vertices.
  // Throws kNegativeWeight, kDomainError (non-finite weight), kEmptyGraph.
  static BipartiteGraph Build(std::span<const Edge> edges);

  // Directed reduction: L = R = the set of endpoint ids (in order of first
  // appearance) and every arc x -> y becomes an edge (L-copy of x, R-copy
  // of y).
  static BipartiteGraph FromDirected(std::span<const Edge> arcs);

  static BipartiteGraph FromIndexed(std::vector<std::string> left_ids,
                                    std::vector<std::string> right_ids,
                                    std::span<const IndexedEdge> edges);

  std::size_t left_count() const { return left_count_; }
  std::size_t right_count() const { return vertex_count() - left_count_; }
  std::size_t vertex_count() const { return degrees_.size(); }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  Side side(Vertex v) const {
    return v < left_count_ ? Side::kLeft : Side::kRight;
  }
  bool contains(Vertex v) const { return v < vertex_count(); }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t fanout(Vertex v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  double degree(Vertex v) const { return degrees_[v]; }

  double max_degree() const { return max_degree_; }
  std::size_t max_fanout() const { return max_fanout_; }
  double total_weight() const { return total_weight_; }
  double max_edge_weight() const { return max_edge_weight_; }
  double min_edge_weight() const { return min_edge_weight_; }

  const std::string& id(Vertex v) const;
  std::optional<Vertex> Find(Side side, std::string_view id) const;

  Vertex LeftVertex(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex RightVertex(std::size_t j) const {
    return static_cast<Vertex>(left_count_ + j);
  }

  // Every edge once, as (left vertex, right vertex, weight), in left-major
  // order.
  std::vector<std::tuple<Vertex, Vertex, double>> Edges() const;

  // Same vertex space and ids, keeping only edges with both endpoints marked
  // in `keep` (indexed by Vertex). Throws kEmptyGraph.
  BipartiteGraph FilterEdges(const std::vector<bool>& keep) const;

  // Swaps the side labels: old right vertices become the new left side.
  BipartiteGraph Transposed() const;

 private:
  struct IdTable;

  BipartiteGraph() = default;
  static BipartiteGraph Assemble(std::shared_ptr<const IdTable> ids,
                                 std::size_t left_count,
                                 std::vector<IndexedEdge> edges);

  std::shared_ptr<const IdTable> ids_;
  std::size_t left_count_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
  double max_degree_ = 0.0;
  std::size_t max_fanout_ = 0;
  double total_weight_ = 0.0;
  double max_edge_weight_ = 0.0;
  double min_edge_weight_ = 0.0;
};

}  // namespace locdense

#endif  // LOCDENSE_BIPARTITE_GRAPH_H_
