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

#include "locdense/global_density.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>

#include "locdense/error.h"

namespace locdense {

GlobalSchedule GlobalSchedule::For(std::size_t vertex_count) {
  if (vertex_count == 0) {
    throw Error(ErrorCode::kEmptyGraph, "schedule for an empty graph");
  }
  GlobalSchedule schedule;
  schedule.vertex_count = vertex_count;
  // Smallest T with 2^T >= 2 sqrt(n), i.e. 4^(T-1) >= n.
  int horizon = 1;
  for (double power = 1.0; power < static_cast<double>(vertex_count);
       power *= 4.0) {
    ++horizon;
  }
  schedule.horizon = horizon;
  const double root_n = std::sqrt(static_cast<double>(vertex_count));
  for (int t = 0; t <= horizon; ++t) {
    schedule.epsilons.push_back(std::ldexp(1.0, t) / (8.0 * root_n));
  }
  if (schedule.epsilons.back() > 1.0) {
    throw Error(ErrorCode::kDomainError, "global schedule exceeds 1");
  }
  return schedule;
}

DensityResult GlobalDensity(const BipartiteGraph& g, bool keep_trace) {
  const GlobalSchedule schedule = GlobalSchedule::For(g.vertex_count());

  std::vector<Vertex> left(g.left_count());
  std::iota(left.begin(), left.end(), Vertex{0});
  std::vector<Vertex> right(g.right_count());
  std::iota(right.begin(), right.end(), static_cast<Vertex>(g.left_count()));

  GrowthOutcome from_left =
      RunPrunedGrowth(g, LevelVector::Indicator(Side::kLeft, left),
                      schedule.epsilons, keep_trace);
  GrowthOutcome from_right =
      RunPrunedGrowth(g, LevelVector::Indicator(Side::kRight, right),
                      schedule.epsilons, keep_trace);

  const bool right_wins =
      from_right.best &&
      (!from_left.best ||
       from_right.best_table_density > from_left.best_table_density);
  GrowthOutcome& winner = right_wins ? from_right : from_left;
  if (!winner.best) {
    throw Error(ErrorCode::kEmptyGraph, "no level pair found");
  }

  const double n = static_cast<double>(g.vertex_count());
  DensityResult result{
      .subgraph = std::move(*winner.best),
      .found_at = winner.found_at,
      .start_side = right_wins ? Side::kRight : Side::kLeft,
      .bound_divisor = 8.0 + 4.0 * std::log2(n),
      .log_factor_weighted =
          std::log2(2.0 * g.max_degree() / schedule.epsilons[0]),
      .log_factor_fanout = std::log2(2.0 * static_cast<double>(g.max_fanout()) /
                                     schedule.epsilons[0]),
      .work = {},
      .traces = {},
  };
  for (const GrowthOutcome* run : {&from_left, &from_right}) {
    result.work.edges_touched += run->work.edges_touched;
    result.work.steps += run->work.steps;
    result.work.max_support =
        std::max(result.work.max_support, run->work.max_support);
  }
  if (keep_trace) {
    result.traces.push_back(std::move(*from_left.trace));
    result.traces.push_back(std::move(*from_right.trace));
  }
  return result;
}

double GlobalGuaranteeBound(double lambda, std::size_t vertex_count) {
  if (!(lambda > 0.0) || vertex_count < 2) {
    throw Error(ErrorCode::kDomainError,
                "global bound needs lambda > 0 and n >= 2");
  }
  return lambda / (8.0 + 4.0 * std::log2(static_cast<double>(vertex_count)));
}

}  // namespace locdense
