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

#include "locdense/growth_process.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <utility>

#include "locdense/error.h"

namespace locdense {
namespace {

static_assert(std::is_integral_v<decltype(LevelEntry::exponent)>,
              "level vectors store exponents, never values");

// sqrt(sum 4^e) without overflow for large exponents.
double ExponentNorm(std::span<const LevelEntry> entries) {
  if (entries.empty()) return 0.0;
  int top = std::numeric_limits<int>::min();
  for (const LevelEntry& e : entries) top = std::max<int>(top, e.exponent);
  double sum = 0.0;
  for (const LevelEntry& e : entries) sum += std::ldexp(1.0, 2 * (e.exponent - top));
  return std::ldexp(std::sqrt(sum), top);
}

std::int16_t CheckedExponent(int e) {
  if (e < std::numeric_limits<std::int16_t>::min() ||
      e > std::numeric_limits<std::int16_t>::max()) {
    throw Error(ErrorCode::kDomainError, "exponent out of range");
  }
  return static_cast<std::int16_t>(e);
}

}  // namespace

LevelVector LevelVector::FromEntries(Side side,
                                     std::vector<LevelEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const LevelEntry& a, const LevelEntry& b) {
              return a.vertex < b.vertex;
            });
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].vertex == entries[k - 1].vertex) {
      throw Error(ErrorCode::kDomainError, "repeated vertex in level vector");
    }
  }
  LevelVector x(side);
  x.entries_ = std::move(entries);
  x.norm_ = ExponentNorm(x.entries_);
  return x;
}

LevelVector LevelVector::Indicator(Side side,
                                   std::span<const Vertex> vertices) {
  std::vector<LevelEntry> entries;
  entries.reserve(vertices.size());
  for (Vertex v : MakeVertexSet(vertices)) entries.push_back({v, 0});
  return FromEntries(side, std::move(entries));
}

std::optional<int> LevelVector::exponent(Vertex v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const LevelEntry& e, Vertex key) { return e.vertex < key; });
  if (it == entries_.end() || it->vertex != v) return std::nullopt;
  return it->exponent;
}

double LevelVector::value(Vertex v) const {
  auto e = exponent(v);
  return e ? std::ldexp(1.0, *e) : 0.0;
}

int CeilLog2(double z) {
  int e = 0;
  const double mantissa = std::frexp(z, &e);
  // z = mantissa * 2^e with mantissa in [0.5, 1).
  return mantissa == 0.5 ? e - 1 : e;
}

LevelVector RoundUpPow2(Side side,
                        std::span<const std::pair<Vertex, double>> z) {
  std::vector<LevelEntry> entries;
  entries.reserve(z.size());
  for (const auto& [v, value] : z) {
    if (value < 0.0 || std::isnan(value)) {
      throw Error(ErrorCode::kNegativeEntry, "cannot round a negative entry");
    }
    if (value == 0.0) continue;
    entries.push_back({v, CheckedExponent(CeilLog2(value))});
  }
  return LevelVector::FromEntries(side, std::move(entries));
}

TruncationResult TruncateWithResidual(const LevelVector& z, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "truncation epsilon outside [0, 1]");
  }
  const double threshold = epsilon * z.norm();
  std::vector<LevelEntry> kept;
  std::vector<LevelEntry> removed;
  for (const LevelEntry& e : z.entries()) {
    if (std::ldexp(1.0, e.exponent) > threshold) {
      kept.push_back(e);
    } else {
      removed.push_back(e);
    }
  }
  TruncationResult result;
  result.pruned_mass = ExponentNorm(removed);
  result.removed = removed.size();
  result.kept = LevelVector::FromEntries(z.side(), std::move(kept));
  return result;
}

SparseVector Multiply(const BipartiteGraph& g, const LevelVector& x,
                      std::size_t* edges_touched) {
  std::size_t fan = 0;
  for (const LevelEntry& e : x.entries()) fan += g.fanout(e.vertex);
  if (edges_touched != nullptr) *edges_touched += fan;

  SparseVector y;
  // Both accumulators add contributions in the same order, so the result
  // does not depend on which one is used.
  if (4 * fan > g.vertex_count()) {
    std::vector<double> acc(g.vertex_count(), 0.0);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> touched;
    for (const LevelEntry& e : x.entries()) {
      for (const Neighbor& nb : g.neighbors(e.vertex)) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          touched.push_back(nb.vertex);
        }
        acc[nb.vertex] += std::ldexp(nb.weight, e.exponent);
      }
    }
    std::sort(touched.begin(), touched.end());
    y.reserve(touched.size());
    for (Vertex v : touched) y.emplace_back(v, acc[v]);
  } else {
    std::unordered_map<Vertex, double> acc;
    acc.reserve(fan);
    for (const LevelEntry& e : x.entries()) {
      for (const Neighbor& nb : g.neighbors(e.vertex)) {
        acc[nb.vertex] += std::ldexp(nb.weight, e.exponent);
      }
    }
    y.assign(acc.begin(), acc.end());
    std::sort(y.begin(), y.end());
  }
  std::erase_if(y, [](const auto& p) { return !(p.second > 0.0); });
  return y;
}

LevelSets GetLevelSets(const LevelVector& x) {
  std::vector<LevelEntry> by_level(x.entries().begin(), x.entries().end());
  std::stable_sort(by_level.begin(), by_level.end(),
                   [](const LevelEntry& a, const LevelEntry& b) {
                     return a.exponent < b.exponent;
                   });
  LevelSets levels;
  for (const LevelEntry& e : by_level) {
    if (levels.empty() || levels.back().exponent != e.exponent) {
      levels.push_back({e.exponent, {}});
    }
    levels.back().vertices.push_back(e.vertex);
  }
  return levels;
}

LevelVector FromLevelSets(Side side, const LevelSets& levels) {
  std::vector<LevelEntry> entries;
  for (const Level& level : levels) {
    for (Vertex v : level.vertices) {
      entries.push_back({v, CheckedExponent(level.exponent)});
    }
  }
  return LevelVector::FromEntries(side, std::move(entries));
}

StepResult Step(const BipartiteGraph& g, const LevelVector& x,
                double epsilon_next, std::size_t* edges_touched) {
  StepResult result;
  result.next = LevelVector(Opposite(x.side()));
  result.rounded = LevelVector(Opposite(x.side()));
  if (x.empty()) return result;
  const SparseVector y = Multiply(g, x, edges_touched);
  result.rounded = RoundUpPow2(Opposite(x.side()), y);
  result.pre_norm = result.rounded.norm();
  result.post_levels = GetLevelSets(result.rounded);
  TruncationResult truncated =
      TruncateWithResidual(result.rounded, epsilon_next);
  result.next = std::move(truncated.kept);
  result.pruned_mass = truncated.pruned_mass;
  result.removed = truncated.removed;
  return result;
}

CandidateEvaluation EvaluateCandidates(const BipartiteGraph& g,
                                       const LevelSets& x_levels,
                                       const LevelSets& y_levels,
                                       std::size_t* edges_touched) {
  if (x_levels.empty() || y_levels.empty()) {
    throw Error(ErrorCode::kNoCandidate, "no level pair to evaluate");
  }
  const Side x_side = g.side(x_levels.front().vertices.front());

  std::vector<std::pair<Vertex, std::uint32_t>> y_lookup;
  for (std::uint32_t j = 0; j < y_levels.size(); ++j) {
    for (Vertex v : y_levels[j].vertices) y_lookup.emplace_back(v, j);
  }
  std::sort(y_lookup.begin(), y_lookup.end());

  const std::size_t cols = y_levels.size();
  std::vector<double> pair_weight(x_levels.size() * cols, 0.0);
  std::size_t fan = 0;
  for (std::size_t i = 0; i < x_levels.size(); ++i) {
    for (Vertex u : x_levels[i].vertices) {
      fan += g.fanout(u);
      for (const Neighbor& nb : g.neighbors(u)) {
        auto it = std::lower_bound(
            y_lookup.begin(), y_lookup.end(), nb.vertex,
            [](const auto& entry, Vertex key) { return entry.first < key; });
        if (it != y_lookup.end() && it->first == nb.vertex) {
          pair_weight[i * cols + it->second] += nb.weight;
        }
      }
    }
  }
  if (edges_touched != nullptr) *edges_touched += fan;

  double best = -1.0;
  std::size_t best_i = 0, best_j = 0;
  for (std::size_t i = 0; i < x_levels.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double d =
          pair_weight[i * cols + j] /
          std::sqrt(static_cast<double>(x_levels[i].vertices.size()) *
                    static_cast<double>(y_levels[j].vertices.size()));
      if (d > best) {
        best = d;
        best_i = i;
        best_j = j;
      }
    }
  }
  const VertexSet& xs = x_levels[best_i].vertices;
  const VertexSet& ys = y_levels[best_j].vertices;
  Subgraph sub = x_side == Side::kLeft ? Subgraph::Of(g, xs, ys)
                                       : Subgraph::Of(g, ys, xs);
  return CandidateEvaluation{
      Candidate{std::move(sub), x_levels[best_i].exponent,
                y_levels[best_j].exponent},
      best, x_levels.size() * cols};
}

bool GrowthBoundHolds(double theta, double max_degree, double epsilon_t,
                      double x_norm, double rounded_norm,
                      double max_pair_density) {
  if (max_pair_density > theta) return true;
  if (rounded_norm == 0.0) return true;
  if (epsilon_t <= 0.0) return true;
  return rounded_norm <=
         2.0 * theta * x_norm * std::log2(2.0 * max_degree / epsilon_t);
}

double LevelCountBound(double max_degree, double epsilon_t) {
  return std::ceil(std::log2(2.0 * max_degree / epsilon_t)) + 1.0;
}

GrowthOutcome RunPrunedGrowth(const BipartiteGraph& g, LevelVector start,
                              std::span<const double> epsilons,
                              bool keep_trace) {
  for (double eps : epsilons) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
      throw Error(ErrorCode::kDomainError, "schedule epsilon outside [0, 1]");
    }
  }
  GrowthOutcome out;
  if (keep_trace) {
    out.trace.emplace();
    out.trace->start_side = start.side();
    out.trace->epsilons.assign(epsilons.begin(), epsilons.end());
  }
  const int horizon = static_cast<int>(epsilons.size()) - 1;
  LevelVector x = std::move(start);
  double best = -1.0;
  for (int t = 0; t < horizon && !x.empty(); ++t) {
    std::size_t touched = 0;
    StepResult step = Step(g, x, epsilons[t + 1], &touched);
    ++out.work.steps;
    out.work.max_support = std::max(out.work.max_support, x.support_size());
    if (step.rounded.empty()) {
      out.work.edges_touched += touched;
      break;
    }
    LevelSets x_levels = GetLevelSets(x);
    CandidateEvaluation eval =
        EvaluateCandidates(g, x_levels, step.post_levels, &touched);
    out.work.edges_touched += touched;
    if (eval.max_pair_density > best) {
      best = eval.max_pair_density;
      out.best = eval.best.subgraph;
      out.found_at = {t, eval.best.i, eval.best.j};
      out.best_table_density = best;
    }
    if (keep_trace) {
      StepRecord rec;
      rec.t = t;
      rec.epsilon = epsilons[t];
      rec.epsilon_next = epsilons[t + 1];
      rec.x = x;
      rec.x_levels = std::move(x_levels);
      rec.rounded_levels = step.post_levels;
      rec.rounded_norm = step.pre_norm;
      rec.pruned_mass = step.pruned_mass;
      rec.removed = step.removed;
      rec.next_support = step.next.support_size();
      rec.max_pair_density = eval.max_pair_density;
      rec.best_i = eval.best.i;
      rec.best_j = eval.best.j;
      rec.best_so_far = best;
      rec.edges_touched = touched;
      out.trace->steps.push_back(std::move(rec));
    }
    x = std::move(step.next);
  }
  return out;
}

}  // namespace locdense
