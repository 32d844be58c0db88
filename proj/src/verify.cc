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

#include "locdense/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locdense/error.h"
#include "locdense/global_density.h"
#include "locdense/local_density.h"
#include "locdense/oracle.h"

namespace locdense {
namespace {

constexpr double kRelTol = 1e-12;

PropertyResult& Get(std::vector<PropertyResult>& results,
                    std::string_view name) {
  for (PropertyResult& r : results) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::kDomainError, "unknown property");
}

void Record(PropertyResult& p, bool ok, const std::string& what = {}) {
  ++p.checks;
  if (!ok) {
    ++p.violations;
    if (p.detail.empty() && !what.empty()) p.detail = what;
  }
}

void CheckGraph(const BipartiteGraph& g, PropertyResult& p) {
  double adjacency_sum = 0.0;
  double max_degree = 0.0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    double degree = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) {
      degree += nb.weight;
      Record(p, nb.weight > 0.0, "non-positive weight");
      Record(p, g.side(nb.vertex) != g.side(u), "edge within one side");
      bool mirrored = false;
      for (const Neighbor& back : g.neighbors(nb.vertex)) {
        if (back.vertex == u && back.weight == nb.weight) mirrored = true;
      }
      Record(p, mirrored, "adjacency is not symmetric");
    }
    adjacency_sum += degree;
    max_degree = std::max(max_degree, degree);
  }
  Record(p, max_degree == g.max_degree(), "max degree mismatch");
  Record(p,
         std::abs(adjacency_sum / 2.0 - g.total_weight()) <=
             kRelTol * g.total_weight(),
         "total weight mismatch");
}

void CheckTrace(const BipartiteGraph& g, const GrowthTrace& trace,
                std::vector<PropertyResult>& results) {
  for (const StepRecord& step : trace.steps) {
    PropertyResult& closure = Get(results, "power-of-two-closure");
    for (const LevelEntry& e : step.x.entries()) {
      int exp = 0;
      Record(closure, std::frexp(std::ldexp(1.0, e.exponent), &exp) == 0.5,
             "entry is not a power of two");
    }

    PropertyResult& sandwich = Get(results, "rounding-sandwich");
    const SparseVector y = Multiply(g, step.x);
    double y_norm2 = 0.0;
    for (const auto& [v, value] : y) {
      y_norm2 += value * value;
      const double r = std::ldexp(1.0, CeilLog2(value));
      Record(sandwich, value <= r && r < 2.0 * value,
             "rounded entry outside [z, 2z)");
    }
    Record(sandwich,
           step.rounded_norm <= 2.0 * std::sqrt(y_norm2) * (1.0 + kRelTol),
           "|round(z)| exceeds 2|z|");

    Record(Get(results, "support-bound"), SupportBoundHolds(step),
           "support exceeds 1/eps^2 at t=" + std::to_string(step.t));
    Record(Get(results, "level-count-bound"),
           LevelCountBoundHolds(step, g.max_degree()),
           "too many levels at t=" + std::to_string(step.t));
    Record(Get(results, "growth-lemma"), GrowthLemmaHolds(step, g.max_degree()),
           "growth bound violated at t=" + std::to_string(step.t));
    Record(Get(results, "pruned-mass-bound"), PrunedMassBoundHolds(step),
           "pruned mass too large at t=" + std::to_string(step.t));
  }
}

void CheckMaximality(const DensityResult& result, PropertyResult& p) {
  double best = -1.0;
  for (const GrowthTrace& trace : result.traces) {
    for (const StepRecord& step : trace.steps) {
      best = std::max(best, step.max_pair_density);
    }
  }
  Record(p,
         std::abs(best - result.subgraph.density()) <=
             kRelTol * std::max(1.0, best),
         "reported density differs from the best traced candidate");
}

}  // namespace

const std::vector<std::string_view>& VerificationProperties() {
  static const std::vector<std::string_view> kNames = {
      "graph-invariants",     "power-of-two-closure", "rounding-sandwich",
      "support-bound",        "level-count-bound",    "growth-lemma",
      "pruned-mass-bound",    "candidate-maximality", "spectral-upper-bound",
      "global-guarantee",     "exact-agreement",      "good-seed-coverage",
      "local-guarantee",
  };
  return kNames;
}

bool SupportBoundHolds(const StepRecord& step) {
  const double eps = step.epsilon;
  return eps <= 0.0 ||
         static_cast<double>(step.x.support_size()) * eps * eps <=
             1.0 + kRelTol;
}

bool LevelCountBoundHolds(const StepRecord& step, double max_degree) {
  return static_cast<double>(step.rounded_levels.size()) <=
         LevelCountBound(max_degree, step.epsilon);
}

bool GrowthLemmaHolds(const StepRecord& step, double max_degree) {
  return GrowthBoundHolds(step.max_pair_density, max_degree, step.epsilon,
                          step.x.norm(), step.rounded_norm,
                          step.max_pair_density);
}

bool PrunedMassBoundHolds(const StepRecord& step) {
  return step.pruned_mass <=
         step.epsilon_next * step.rounded_norm *
             std::sqrt(static_cast<double>(step.removed)) * (1.0 + kRelTol);
}

std::vector<PropertyResult> RunVerification(const BipartiteGraph& g,
                                            const VerifyOptions& options) {
  std::vector<PropertyResult> results;
  for (std::string_view name : VerificationProperties()) {
    PropertyResult r;
    r.name = std::string(name);
    results.push_back(std::move(r));
  }
  CheckGraph(g, Get(results, "graph-invariants"));

  std::vector<DensityResult> runs;
  runs.push_back(GlobalDensity(g, /*keep_trace=*/true));
  const double global_density = runs.front().subgraph.density();

  std::size_t started = 0;
  for (Vertex v = 0; v < g.vertex_count() && started < options.local_seeds;
       ++v) {
    if (g.fanout(v) == 0) continue;
    runs.push_back(LocalDensity(g, v, options.target_size, true));
    ++started;
  }

  std::optional<GoodSeedReport> good;
  std::optional<double> theta = options.theta;
  long planted_k = 0;
  if (options.planted) {
    const auto& [s, t] = *options.planted;
    const Subgraph planted = Subgraph::Of(g, s, t);
    if (!theta) theta = planted.density() / 2.0;
    planted_k = static_cast<long>(std::max(planted.left().size(),
                                           planted.right().size()));
    PropertyResult& coverage = Get(results, "good-seed-coverage");
    try {
      good = GoodSeedSet(g, s, t, *theta);
      Record(coverage, good->coverage >= 0.5,
             "coverage " + std::to_string(good->coverage) + " below 1/2");
      for (const SeedCertificate& seed : good->seeds) {
        Record(coverage, seed.margin >= -1e-9, "certificate margin negative");
        Record(coverage, seed.psi_value >= good->threshold - 1e-12,
               "psi(v) below 1/sqrt(2|S|)");
      }
      for (const SparseCertificate& psi : good->certificates) {
        for (const auto& [u, value] : psi) {
          Record(coverage,
                 std::binary_search(s.begin(), s.end(), u) ||
                     std::binary_search(t.begin(), t.end(), u),
                 "certificate support leaves S u T");
        }
      }
    } catch (const Error& e) {
      Record(coverage, false, e.what());
    }
  } else {
    Get(results, "good-seed-coverage").skipped = true;
    Get(results, "local-guarantee").skipped = true;
  }

  if (good && theta) {
    PropertyResult& guarantee = Get(results, "local-guarantee");
    if (g.max_degree() < 1.0) {
      guarantee.skipped = true;
      guarantee.detail = "max degree below 1";
    } else {
      const double bound =
          LocalGuaranteeBound(*theta, g.max_degree(), planted_k);
      std::size_t achieved = 0;
      for (Vertex v : good->good_set) {
        runs.push_back(LocalDensity(g, v, planted_k, true));
        const bool ok = runs.back().subgraph.density() >= bound;
        achieved += ok;
        Record(guarantee, ok, "seed " + g.id(v) + " falls below the bound");
      }
      if (good->good_set.empty()) Record(guarantee, false, "empty good set");
      std::ostringstream detail;
      detail << achieved << "/" << good->good_set.size()
             << " good seeds reach " << bound;
      if (guarantee.detail.empty()) guarantee.detail = detail.str();
    }
  }

  for (const DensityResult& run : runs) {
    for (const GrowthTrace& trace : run.traces) CheckTrace(g, trace, results);
    CheckMaximality(run, Get(results, "candidate-maximality"));
  }

  const EigenEstimate eig = TopEigenvalue(g);
  const double spectral = (eig.value + eig.residual) * (1.0 + kRelTol);
  PropertyResult& upper = Get(results, "spectral-upper-bound");
  for (const DensityResult& run : runs) {
    Record(upper, run.subgraph.density() <= spectral,
           "density exceeds lambda + residual");
  }
  {
    std::ostringstream detail;
    detail << "lambda=" << eig.value << " residual=" << eig.residual
           << (eig.converged ? "" : " (not converged)");
    upper.detail = upper.violations ? upper.detail : detail.str();
  }

  PropertyResult& global = Get(results, "global-guarantee");
  if (g.vertex_count() >= 2) {
    const double bound = GlobalGuaranteeBound(eig.value, g.vertex_count());
    Record(global, global_density >= bound,
           "global density below lambda/(8+4 log2 n)");
    if (global.violations == 0) {
      global.detail = std::to_string(global_density) +
                      " >= " + std::to_string(bound);
    }
  }

  PropertyResult& exact = Get(results, "exact-agreement");
  if (std::min(g.left_count(), g.right_count()) <= options.exact_side_cap) {
    const Subgraph best = ExactDensest(g, options.exact_side_cap);
    Record(exact, best.density() <= spectral, "exact d(A) exceeds lambda");
    for (const DensityResult& run : runs) {
      Record(exact,
             run.subgraph.density() <= best.density() * (1.0 + kRelTol),
             "a run exceeds the exact optimum");
    }
    if (exact.violations == 0) {
      exact.detail = "d(A)=" + std::to_string(best.density());
    }
  } else {
    exact.skipped = true;
    exact.detail = "graph above the exact side cap";
  }
  return results;
}

}  // namespace locdense
