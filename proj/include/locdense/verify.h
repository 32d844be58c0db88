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

#ifndef LOCDENSE_VERIFY_H_
#define LOCDENSE_VERIFY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locdense/bipartite_graph.h"
#include "locdense/density.h"
#include "locdense/growth_process.h"

namespace locdense {

struct PropertyResult {
  std::string name;
  bool skipped = false;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string detail;

  bool passed() const { return skipped || violations == 0; }
};

struct VerifyOptions {
  // Planted (S, T); enables the good-seed and local-guarantee properties.
  std::optional<std::pair<VertexSet, VertexSet>> planted;
  // Defaults to d(S, T) / 2 when a planted pair is given.
  std::optional<double> theta;
  long target_size = 8;
  std::size_t local_seeds = 16;
  std::size_t exact_side_cap = 12;
};

// Property names in report order.
const std::vector<std::string_view>& VerificationProperties();

// Checks a single trace step against the support, level-count, growth and
// pruned-mass bounds. Each returns true when the bound holds.
bool SupportBoundHolds(const StepRecord& step);
bool LevelCountBoundHolds(const StepRecord& step, double max_degree);
bool GrowthLemmaHolds(const StepRecord& step, double max_degree);
bool PrunedMassBoundHolds(const StepRecord& step);

// Runs the global algorithm, local runs from the planted good seeds or the
// first `local_seeds` non-isolated vertices, the spectral estimate and,
// where the graph is small enough, the exact oracle, then checks every
// property against them.
std::vector<PropertyResult> RunVerification(const BipartiteGraph& g,
                                            const VerifyOptions& options);

}  // namespace locdense

#endif  // LOCDENSE_VERIFY_H_
