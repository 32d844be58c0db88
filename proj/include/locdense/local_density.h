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

#ifndef LOCDENSE_LOCAL_DENSITY_H_
#define LOCDENSE_LOCAL_DENSITY_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "locdense/bipartite_graph.h"
#include "locdense/density.h"
#include "locdense/error.h"
#include "locdense/growth_process.h"

namespace locdense {

// Horizon T = ceil(log2 sqrt(2K)) and eps_t = 2^-t / (8K), t = 0 .. T.
struct LocalSchedule {
  long target_size = 1;
  int horizon = 1;
  std::vector<double> epsilons;

  // Throws kDomainError for K < 1.
  static LocalSchedule For(long target_size);
};

struct DensityResult {
  Subgraph subgraph;
  FoundAt found_at;
  Side start_side = Side::kLeft;
  // The run's density guarantee is theta / bound_divisor.
  double bound_divisor = 0.0;
  // log2(2 Delta / eps_0) with Delta the weighted and the combinatorial
  // maximum degree.
  double log_factor_weighted = 0.0;
  double log_factor_fanout = 0.0;
  WorkCounters work;
  std::vector<GrowthTrace> traces;
};

// Runs the pruned growth process from the indicator of `seed` and returns the
// densest level pair seen. Throws kUnknownVertex, kDomainError (K < 1) and
// kNoCandidate when the seed has no edges.
DensityResult LocalDensity(const BipartiteGraph& g, Vertex seed,
                           long target_size, bool keep_trace = false);

// theta / (8 log2(16 Delta K)). Throws kDomainError unless theta > 0,
// Delta >= 1 and K >= 1.
double LocalGuaranteeBound(double theta, double max_degree, long target_size);

struct SeedRun {
  Vertex seed;
  std::size_t seed_index;
  DensityResult result;
};

struct SeedFailure {
  Vertex seed;
  std::size_t seed_index;
  ErrorCode code;
  std::string message;
};

struct ScanResult {
  std::vector<SeedRun> runs;  // densest first, at most top_n
  std::vector<SeedFailure> failures;
};

// Runs LocalDensity from every seed (up to `parallelism` at a time, 0 for
// the hardware default), drops runs whose (S, T) repeats an earlier seed's,
// and keeps the top_n densest. Ties keep input order.
ScanResult SeedScan(const BipartiteGraph& g, std::span<const Vertex> seeds,
                    long target_size, std::size_t top_n,
                    unsigned parallelism = 0);

}  // namespace locdense

#endif  // LOCDENSE_LOCAL_DENSITY_H_
