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

#include "locdense/planted.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "locdense/error.h"

namespace locdense {
namespace {

// First `count` entries of a seeded partial Fisher-Yates shuffle of
// [0, population).
std::vector<std::uint64_t> SampleDistinct(std::uint64_t population,
                                          std::size_t count,
                                          std::mt19937_64& rng) {
  std::vector<std::uint64_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::uint64_t> pick(k, population - 1);
    std::swap(pool[k], pool[pick(rng)]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace

PlantedInstance GeneratePlanted(const PlantedSpec& spec) {
  if (spec.block_left == 0 || spec.block_right == 0 ||
      spec.block_left > spec.left_count ||
      spec.block_right > spec.right_count) {
    throw Error(ErrorCode::kDomainError, "planted block does not fit");
  }
  if (!(spec.density_factor > 0.0 && spec.density_factor <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "density factor must be in (0, 1]");
  }
  const std::uint64_t block_pairs =
      static_cast<std::uint64_t>(spec.block_left) * spec.block_right;
  const auto block_edges = static_cast<std::uint64_t>(
      std::llround(spec.density_factor * static_cast<double>(block_pairs)));
  if (block_edges == 0) {
    throw Error(ErrorCode::kDomainError, "planted block would be empty");
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::uint64_t> s_pick =
      SampleDistinct(spec.left_count, spec.block_left, rng);
  std::vector<std::uint64_t> t_pick =
      SampleDistinct(spec.right_count, spec.block_right, rng);
  std::vector<char> in_s(spec.left_count, 0), in_t(spec.right_count, 0);
  for (auto i : s_pick) in_s[i] = 1;
  for (auto j : t_pick) in_t[j] = 1;

  std::vector<IndexedEdge> edges;
  for (std::uint64_t p : SampleDistinct(block_pairs, block_edges, rng)) {
    edges.push_back({static_cast<std::uint32_t>(s_pick[p / spec.block_right]),
                     static_cast<std::uint32_t>(t_pick[p % spec.block_right]),
                     1.0});
  }

  auto allowed = [&](std::uint64_t l, std::uint64_t r) {
    if (spec.detach_block) return !in_s[l] && !in_t[r];
    return !(in_s[l] && in_t[r]);
  };
  const std::uint64_t available =
      spec.detach_block
          ? static_cast<std::uint64_t>(spec.left_count - spec.block_left) *
                (spec.right_count - spec.block_right)
          : static_cast<std::uint64_t>(spec.left_count) * spec.right_count -
                block_pairs;
  if (spec.noise_edges > available) {
    throw Error(ErrorCode::kDomainError, "too many noise edges requested");
  }
  std::uniform_int_distribution<std::uint64_t> pick_l(0, spec.left_count - 1);
  std::uniform_int_distribution<std::uint64_t> pick_r(0, spec.right_count - 1);
  if (2 * static_cast<std::uint64_t>(spec.noise_edges) <= available) {
    std::unordered_set<std::uint64_t> used;
    used.reserve(spec.noise_edges);
    while (used.size() < spec.noise_edges) {
      const std::uint64_t l = pick_l(rng);
      const std::uint64_t r = pick_r(rng);
      if (!allowed(l, r)) continue;
      if (!used.insert(l * spec.right_count + r).second) continue;
      edges.push_back({static_cast<std::uint32_t>(l),
                       static_cast<std::uint32_t>(r), 1.0});
    }
  } else {
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t l = 0; l < spec.left_count; ++l) {
      for (std::uint64_t r = 0; r < spec.right_count; ++r) {
        if (allowed(l, r)) candidates.push_back(l * spec.right_count + r);
      }
    }
    for (std::uint64_t k :
         SampleDistinct(candidates.size(), spec.noise_edges, rng)) {
      edges.push_back(
          {static_cast<std::uint32_t>(candidates[k] / spec.right_count),
           static_cast<std::uint32_t>(candidates[k] % spec.right_count), 1.0});
    }
  }

  std::vector<std::string> left_ids(spec.left_count);
  std::vector<std::string> right_ids(spec.right_count);
  for (std::size_t i = 0; i < spec.left_count; ++i) {
    left_ids[i] = "l" + std::to_string(i);
  }
  for (std::size_t j = 0; j < spec.right_count; ++j) {
    right_ids[j] = "r" + std::to_string(j);
  }
  BipartiteGraph graph = BipartiteGraph::FromIndexed(
      std::move(left_ids), std::move(right_ids), edges);
  VertexSet left, right;
  for (auto i : s_pick) left.push_back(graph.LeftVertex(i));
  for (auto j : t_pick) right.push_back(graph.RightVertex(j));
  return {std::move(graph), MakeVertexSet(left), MakeVertexSet(right)};
}

}  // namespace locdense
