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

#ifndef LOCDENSE_GROWTH_PROCESS_H_
#define LOCDENSE_GROWTH_PROCESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locdense/bipartite_graph.h"
#include "locdense/density.h"

namespace locdense {

// One nonzero entry of a LevelVector: the value 2^exponent at `vertex`.
// Values are never stored as floating point; a double's exponent range
// always fits in 16 bits.
struct LevelEntry {
  Vertex vertex;
  std::int16_t exponent;

  friend bool operator==(const LevelEntry&, const LevelEntry&) = default;
};

// Sparse nonnegative vector whose nonzero entries are exact powers of two,
// supported on a single side of the graph. Entries are sorted by vertex.
class LevelVector {
 public:
  LevelVector() = default;
  explicit LevelVector(Side side) : side_(side) {}

  // Throws kDomainError on repeated vertices.
  static LevelVector FromEntries(Side side, std::vector<LevelEntry> entries);
  // The 0/1 indicator of `vertices` (every exponent is zero).
  static LevelVector Indicator(Side side, std::span<const Vertex> vertices);

  Side side() const { return side_; }
  std::span<const LevelEntry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double norm() const { return norm_; }

  std::optional<int> exponent(Vertex v) const;
  double value(Vertex v) const;

  friend bool operator==(const LevelVector&, const LevelVector&) = default;

 private:
  Side side_ = Side::kLeft;
  std::vector<LevelEntry> entries_;
  double norm_ = 0.0;
};

// Sorted by vertex, strictly positive values.
using SparseVector = std::vector<std::pair<Vertex, double>>;

// Nonempty levels of a LevelVector in increasing exponent order.
struct Level {
  int exponent;
  VertexSet vertices;

  friend bool operator==(const Level&, const Level&) = default;
};
using LevelSets = std::vector<Level>;

// Smallest i with 2^i >= z, for z > 0.
int CeilLog2(double z);

// Rounds each entry up to the nearest power of two. Zero entries are
// dropped. Throws kNegativeEntry.
LevelVector RoundUpPow2(Side side, std::span<const std::pair<Vertex, double>> z);

struct TruncationResult {
  LevelVector kept;
  double pruned_mass = 0.0;  // norm of the removed entries
  std::size_t removed = 0;
};

// Keeps entry u iff z(u) > epsilon * |z|. Throws kDomainError unless
// epsilon is in [0, 1].
TruncationResult TruncateWithResidual(const LevelVector& z, double epsilon);
inline LevelVector Truncate(const LevelVector& z, double epsilon) {
  return TruncateWithResidual(z, epsilon).kept;
}

// y = xA. Only the adjacency lists of Support(x) are read; `edges_touched`
// (if given) is increased by their total length.
SparseVector Multiply(const BipartiteGraph& g, const LevelVector& x,
                      std::size_t* edges_touched = nullptr);

LevelSets GetLevelSets(const LevelVector& x);
LevelVector FromLevelSets(Side side, const LevelSets& levels);

struct StepResult {
  LevelVector next;     // truncate(round(xA))
  LevelVector rounded;  // round(xA), before truncation
  LevelSets post_levels;
  double pre_norm = 0.0;  // |round(xA)|
  double pruned_mass = 0.0;
  std::size_t removed = 0;

  // The process cannot continue once the support is empty.
  bool zero_vector() const { return next.empty(); }
};

// One multiply-round-truncate step of the pruned growth process.
StepResult Step(const BipartiteGraph& g, const LevelVector& x,
                double epsilon_next, std::size_t* edges_touched = nullptr);

struct Candidate {
  Subgraph subgraph;
  int i;  // exponent level in the current vector x_t
  int j;  // exponent level in round(x_t A)
};

struct CandidateEvaluation {
  Candidate best;
  double max_pair_density = 0.0;
  std::size_t pairs_evaluated = 0;
};

// Densest pair (level i of x_t, level j of round(x_t A)), reported with the
// left-side set first regardless of which side x_t is on. All pair weights
// come from one pass over the edges incident to the x-levels. Ties go to
// the smaller i, then the smaller j. Throws kNoCandidate if either family
// is empty.
CandidateEvaluation EvaluateCandidates(const BipartiteGraph& g,
                                       const LevelSets& x_levels,
                                       const LevelSets& y_levels,
                                       std::size_t* edges_touched = nullptr);

// |round(x_t A)| <= 2 theta |x_t| log2(2 Delta / eps_t), required only when
// every level pair has density at most theta.
bool GrowthBoundHolds(double theta, double max_degree, double epsilon_t,
                      double x_norm, double rounded_norm,
                      double max_pair_density);

// Upper bound on the number of nonempty levels of round(x_t A):
// ceil(log2(2 Delta / eps_t)) + 1.
double LevelCountBound(double max_degree, double epsilon_t);

struct FoundAt {
  int t = 0;
  int i = 0;
  int j = 0;

  friend bool operator==(const FoundAt&, const FoundAt&) = default;
};

struct WorkCounters {
  std::size_t edges_touched = 0;
  std::size_t steps = 0;
  std::size_t max_support = 0;
};

struct StepRecord {
  int t = 0;
  double epsilon = 0.0;       // eps_t, the truncation level of x_t
  double epsilon_next = 0.0;  // eps_{t+1}, applied to round(x_t A)
  LevelVector x;              // x_t
  LevelSets x_levels;
  LevelSets rounded_levels;   // levels of round(x_t A)
  double rounded_norm = 0.0;  // |round(x_t A)|
  double pruned_mass = 0.0;   // |round(x_t A) - x_{t+1}|
  std::size_t removed = 0;
  std::size_t next_support = 0;
  double max_pair_density = 0.0;
  int best_i = 0;
  int best_j = 0;
  double best_so_far = 0.0;
  std::size_t edges_touched = 0;
};

struct GrowthTrace {
  Side start_side = Side::kLeft;
  std::vector<double> epsilons;
  std::vector<StepRecord> steps;
};

struct GrowthOutcome {
  std::optional<Subgraph> best;
  FoundAt found_at;
  double best_table_density = 0.0;
  WorkCounters work;
  std::optional<GrowthTrace> trace;
};

// Runs x_{t+1} = truncate_{eps_{t+1}}(round(x_t A)) for t = 0 .. T-1 where
// T = epsilons.size() - 1, evaluating every level pair of each step. Stops
// early when the support empties. `best` is empty only if no step produced
// a candidate.
GrowthOutcome RunPrunedGrowth(const BipartiteGraph& g, LevelVector start,
                              std::span<const double> epsilons,
                              bool keep_trace);

}  // namespace locdense

#endif  // LOCDENSE_GROWTH_PROCESS_H_
