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

#include "locdense/bipartite_graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "locdense/error.h"

namespace locdense {

struct BipartiteGraph::IdTable {
  std::vector<std::string> ids;
  std::size_t left_count = 0;
  // Vertices of each side sorted by id, for lookup.
  std::vector<Vertex> left_order;
  std::vector<Vertex> right_order;

  IdTable(std::vector<std::string> left_ids,
          std::vector<std::string> right_ids)
      : left_count(left_ids.size()) {
    ids = std::move(left_ids);
    ids.reserve(ids.size() + right_ids.size());
    for (auto& id : right_ids) ids.push_back(std::move(id));
    left_order.resize(left_count);
    std::iota(left_order.begin(), left_order.end(), Vertex{0});
    right_order.resize(ids.size() - left_count);
    std::iota(right_order.begin(), right_order.end(),
              static_cast<Vertex>(left_count));
    auto by_id = [this](Vertex a, Vertex b) { return ids[a] < ids[b]; };
    std::sort(left_order.begin(), left_order.end(), by_id);
    std::sort(right_order.begin(), right_order.end(), by_id);
  }
};

namespace {

void CheckWeight(double w) {
  if (std::isnan(w) || std::isinf(w)) {
    throw Error(ErrorCode::kDomainError, "edge weight is not finite");
  }
  if (w < 0.0) {
    throw Error(ErrorCode::kNegativeWeight,
                "negative edge weight " + std::to_string(w));
  }
}

// Assigns dense indices to string ids in order of first appearance.
class IdInterner {
 public:
  std::uint32_t Intern(const std::string& id) {
    auto [it, inserted] =
        index_.try_emplace(id, static_cast<std::uint32_t>(ids_.size()));
    if (inserted) ids_.push_back(id);
    return it->second;
  }
  std::vector<std::string> Release() { return std::move(ids_); }

 private:
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::string> ids_;
};

}  // namespace

std::string_view SideName(Side side) {
  return side == Side::kLeft ? "L" : "R";
}

const std::string& BipartiteGraph::id(Vertex v) const { return ids_->ids[v]; }

BipartiteGraph BipartiteGraph::Build(std::span<const Edge> edges) {
  IdInterner left, right;
  std::vector<IndexedEdge> indexed;
  indexed.reserve(edges.size());
  for (const Edge& e : edges) {
    CheckWeight(e.weight);
    indexed.push_back({left.Intern(e.left), right.Intern(e.right), e.weight});
  }
  auto ids = std::make_shared<const IdTable>(left.Release(), right.Release());
  const std::size_t left_count = ids->left_count;
  return Assemble(std::move(ids), left_count, std::move(indexed));
}

BipartiteGraph BipartiteGraph::FromDirected(std::span<const Edge> arcs) {
  IdInterner vertices;
  std::vector<IndexedEdge> indexed;
  indexed.reserve(arcs.size());
  for (const Edge& a : arcs) {
    CheckWeight(a.weight);
    const std::uint32_t src = vertices.Intern(a.left);
    const std::uint32_t dst = vertices.Intern(a.right);
    indexed.push_back({src, dst, a.weight});
  }
  std::vector<std::string> left_ids = vertices.Release();
  std::vector<std::string> right_ids = left_ids;
  auto ids =
      std::make_shared<const IdTable>(std::move(left_ids), std::move(right_ids));
  const std::size_t left_count = ids->left_count;
  return Assemble(std::move(ids), left_count, std::move(indexed));
}

BipartiteGraph BipartiteGraph::FromIndexed(std::vector<std::string> left_ids,
                                           std::vector<std::string> right_ids,
                                           std::span<const IndexedEdge> edges) {
  for (const IndexedEdge& e : edges) {
    CheckWeight(e.weight);
    if (e.left >= left_ids.size() || e.right >= right_ids.size()) {
      throw Error(ErrorCode::kDomainError, "edge endpoint index out of range");
    }
  }
  auto ids =
      std::make_shared<const IdTable>(std::move(left_ids), std::move(right_ids));
  const std::size_t left_count = ids->left_count;
  return Assemble(std::move(ids), left_count,
                  std::vector<IndexedEdge>(edges.begin(), edges.end()));
}

BipartiteGraph BipartiteGraph::Assemble(std::shared_ptr<const IdTable> ids,
                                        std::size_t left_count,
                                        std::vector<IndexedEdge> edges) {
  std::sort(edges.begin(), edges.end(),
            [](const IndexedEdge& a, const IndexedEdge& b) {
              return a.left != b.left ? a.left < b.left : a.right < b.right;
            });
  // Merge duplicates in sorted order so the summation is deterministic.
  std::vector<IndexedEdge> merged;
  merged.reserve(edges.size());
  for (const IndexedEdge& e : edges) {
    if (!merged.empty() && merged.back().left == e.left &&
        merged.back().right == e.right) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const IndexedEdge& e) { return e.weight == 0.0; });
  if (merged.empty()) {
    throw Error(ErrorCode::kEmptyGraph, "graph has no positive-weight edge");
  }

  BipartiteGraph g;
  g.ids_ = std::move(ids);
  g.left_count_ = left_count;
  const std::size_t n = g.ids_->ids.size();
  g.offsets_.assign(n + 1, 0);
  for (const IndexedEdge& e : merged) {
    ++g.offsets_[e.left + 1];
    ++g.offsets_[left_count + e.right + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * merged.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Left-major order fills every right list in increasing left index and
  // every left list in increasing right index.
  for (const IndexedEdge& e : merged) {
    const Vertex u = e.left;
    const Vertex v = static_cast<Vertex>(left_count + e.right);
    g.adjacency_[cursor[u]++] = {v, e.weight};
    g.adjacency_[cursor[v]++] = {u, e.weight};
  }

  g.degrees_.assign(n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    double sum = 0.0;
    for (const Neighbor& nb : g.neighbors(v)) sum += nb.weight;
    g.degrees_[v] = sum;
    g.max_degree_ = std::max(g.max_degree_, sum);
    g.max_fanout_ = std::max(g.max_fanout_, g.fanout(v));
  }
  g.min_edge_weight_ = merged.front().weight;
  for (const IndexedEdge& e : merged) {
    g.total_weight_ += e.weight;
    g.max_edge_weight_ = std::max(g.max_edge_weight_, e.weight);
    g.min_edge_weight_ = std::min(g.min_edge_weight_, e.weight);
  }
  return g;
}

std::optional<Vertex> BipartiteGraph::Find(Side side,
                                           std::string_view id) const {
  const auto& order =
      side == Side::kLeft ? ids_->left_order : ids_->right_order;
  auto it = std::lower_bound(
      order.begin(), order.end(), id,
      [this](Vertex v, std::string_view key) { return ids_->ids[v] < key; });
  if (it == order.end() || ids_->ids[*it] != id) return std::nullopt;
  return *it;
}

std::vector<std::tuple<Vertex, Vertex, double>> BipartiteGraph::Edges()
    const {
  std::vector<std::tuple<Vertex, Vertex, double>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < left_count_; ++u) {
    for (const Neighbor& nb : neighbors(u)) out.emplace_back(u, nb.vertex, nb.weight);
  }
  return out;
}

BipartiteGraph BipartiteGraph::FilterEdges(const std::vector<bool>& keep) const {
  std::vector<IndexedEdge> kept;
  for (Vertex u = 0; u < left_count_; ++u) {
    if (!keep[u]) continue;
    for (const Neighbor& nb : neighbors(u)) {
      if (keep[nb.vertex]) {
        kept.push_back({u, static_cast<std::uint32_t>(nb.vertex - left_count_),
                        nb.weight});
      }
    }
  }
  return Assemble(ids_, left_count_, std::move(kept));
}

BipartiteGraph BipartiteGraph::Transposed() const {
  std::vector<std::string> new_left(ids_->ids.begin() + left_count_,
                                    ids_->ids.end());
  std::vector<std::string> new_right(ids_->ids.begin(),
                                     ids_->ids.begin() + left_count_);
  std::vector<IndexedEdge> edges;
  edges.reserve(edge_count());
  for (Vertex u = 0; u < left_count_; ++u) {
    for (const Neighbor& nb : neighbors(u)) {
      edges.push_back(
          {static_cast<std::uint32_t>(nb.vertex - left_count_), u, nb.weight});
    }
  }
  const std::size_t new_left_count = new_left.size();
  auto ids = std::make_shared<const IdTable>(std::move(new_left),
                                             std::move(new_right));
  return Assemble(std::move(ids), new_left_count, std::move(edges));
}

}  // namespace locdense
