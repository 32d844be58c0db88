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

#ifndef LOCDENSE_GLOBAL_DENSITY_H_
#define LOCDENSE_GLOBAL_DENSITY_H_

#include <cstddef>
#include <vector>

#include "locdense/bipartite_graph.h"
#include "locdense/local_density.h"

namespace locdense {

// Horizon T = ceil(log2(2 sqrt(n))) and eps_t = 2^t / (8 sqrt(n)),
// t = 0 .. T. The last epsilon is always in [1/4, 1/2).
struct GlobalSchedule {
  std::size_t vertex_count = 0;
  int horizon = 0;
  std::vector<double> epsilons;

  static GlobalSchedule For(std::size_t vertex_count);
};

// Runs the pruned growth process from 1_L and from 1_R and returns the
// densest level pair over both runs (the 1_L run wins ties). Traces, when
// kept, are in that order.
DensityResult GlobalDensity(const BipartiteGraph& g, bool keep_trace = false);

// lambda / (8 + 4 log2 n). Throws kDomainError unless lambda > 0, n >= 2.
double GlobalGuaranteeBound(double lambda, std::size_t vertex_count);

}  // namespace locdense

#endif  // LOCDENSE_GLOBAL_DENSITY_H_
