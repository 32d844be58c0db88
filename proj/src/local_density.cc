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

#include "locdense/local_density.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <thread>
#include <utility>

namespace locdense {

LocalSchedule LocalSchedule::For(long target_size) {
  if (target_size < 1) {
    throw Error(ErrorCode::kDomainError, "target size must be at least 1");
  }
  LocalSchedule schedule;
  schedule.target_size = target_size;
  // Smallest T with 2^T >= sqrt(2K), i.e. 4^T >= 2K.
  int horizon = 0;
  for (double power = 1.0; power < 2.0 * static_cast<double>(target_size);
       power *= 4.0) {
    ++horizon;
  }
  schedule.horizon = std::max(horizon, 1);
  for (int t = 0; t <= schedule.horizon; ++t) {
    schedule.epsilons.push_back(
        std::ldexp(1.0 / (8.0 * static_cast<double>(target_size)), -t));
  }
  return schedule;
}

DensityResult LocalDensity(const BipartiteGraph& g, Vertex seed,
                           long target_size, bool keep_trace) {
  if (!g.contains(seed)) {
    throw Error(ErrorCode::kUnknownVertex,
                "seed index " + std::to_string(seed) + " out of range");
  }
  const LocalSchedule schedule = LocalSchedule::For(target_size);
  const Vertex start[] = {seed};
  GrowthOutcome outcome =
      RunPrunedGrowth(g, LevelVector::Indicator(g.side(seed), start),
                      schedule.epsilons, keep_trace);
  if (!outcome.best) {
    throw Error(ErrorCode::kNoCandidate,
                "seed " + g.id(seed) + " reaches no edges");
  }
  const double k = static_cast<double>(target_size);
  DensityResult result{
      .subgraph = std::move(*outcome.best),
      .found_at = outcome.found_at,
      .start_side = g.side(seed),
      .bound_divisor = 8.0 * std::log2(16.0 * g.max_degree() * k),
      .log_factor_weighted =
          std::log2(2.0 * g.max_degree() / schedule.epsilons[0]),
      .log_factor_fanout = std::log2(
          2.0 * static_cast<double>(g.max_fanout()) / schedule.epsilons[0]),
      .work = outcome.work,
      .traces = {},
  };
  if (outcome.trace) result.traces.push_back(std::move(*outcome.trace));
  return result;
}

double LocalGuaranteeBound(double theta, double max_degree,
                           long target_size) {
  if (!(theta > 0.0) || !(max_degree >= 1.0) || target_size < 1) {
    throw Error(ErrorCode::kDomainError,
                "local bound needs theta > 0, Delta >= 1, K >= 1");
  }
  return theta /
         (8.0 * std::log2(16.0 * max_degree * static_cast<double>(target_size)));
}

ScanResult SeedScan(const BipartiteGraph& g, std::span<const Vertex> seeds,
                    long target_size, std::size_t top_n,
                    unsigned parallelism) {
  std::vector<std::optional<DensityResult>> results(seeds.size());
  std::vector<std::optional<SeedFailure>> failures(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < seeds.size(); k = next++) {
      try {
        results[k] = LocalDensity(g, seeds[k], target_size);
      } catch (const Error& e) {
        failures[k] = SeedFailure{seeds[k], k, e.code(), e.what()};
      }
    }
  };
  if (parallelism == 0) {
    parallelism = std::max(1u, std::thread::hardware_concurrency());
  }
  const std::size_t workers =
      std::min<std::size_t>(parallelism, std::max<std::size_t>(seeds.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  ScanResult scan;
  std::map<std::pair<VertexSet, VertexSet>, bool> seen;
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (failures[k]) {
      scan.failures.push_back(std::move(*failures[k]));
      continue;
    }
    const Subgraph& sub = results[k]->subgraph;
    if (!seen.emplace(std::make_pair(sub.left(), sub.right()), true).second) {
      continue;
    }
    scan.runs.push_back(SeedRun{seeds[k], k, std::move(*results[k])});
  }
  std::stable_sort(scan.runs.begin(), scan.runs.end(),
                   [](const SeedRun& a, const SeedRun& b) {
                     return a.result.subgraph.density() >
                            b.result.subgraph.density();
                   });
  if (scan.runs.size() > top_n) {
    scan.runs.erase(scan.runs.begin() + static_cast<std::ptrdiff_t>(top_n),
                    scan.runs.end());
  }
  return scan;
}

}  // namespace locdense
