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

#ifndef LOCDENSE_PLANTED_H_
#define LOCDENSE_PLANTED_H_

#include <cstddef>
#include <cstdint>

#include "locdense/bipartite_graph.h"
#include "locdense/density.h"

namespace locdense {

struct PlantedSpec {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::size_t noise_edges = 0;
  std::size_t block_left = 0;   // |S|
  std::size_t block_right = 0;  // |T|
  // The block keeps round(factor * |S| |T|) of its pairs, so its density is
  // the nearest achievable value to factor * sqrt(|S| |T|).
  double density_factor = 1.0;
  std::uint64_t seed = 0;
  // Noise edges avoid S and T entirely, leaving the block as its own
  // component.
  bool detach_block = false;
};

struct PlantedInstance {
  BipartiteGraph graph;
  VertexSet left;   // S
  VertexSet right;  // T
};

// Unit-weight graph with ids l0.. and r0..: a dense block on randomly chosen
// (S, T) plus `noise_edges` distinct uniform edges outside S x T.
// Deterministic in `seed`. Throws kDomainError on infeasible parameters.
PlantedInstance GeneratePlanted(const PlantedSpec& spec);

}  // namespace locdense

#endif  // LOCDENSE_PLANTED_H_
