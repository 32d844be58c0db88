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

#ifndef LOCDENSE_RESULT_DOCUMENT_H_
#define LOCDENSE_RESULT_DOCUMENT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locdense/bipartite_graph.h"
#include "locdense/density.h"
#include "locdense/growth_process.h"
#include "locdense/local_density.h"

namespace locdense {

// One line of a result document. Serialized as a single-line JSON object
// with sorted keys, so equal records give byte-identical lines.
struct ResultRecord {
  std::string kind;  // "local", "global", "exact" or "scan"
  std::optional<std::string> seed;
  std::optional<std::string> seed_side;
  std::optional<long> target_size;
  std::vector<std::string> left_ids;   // S
  std::vector<std::string> right_ids;  // T
  double edge_weight = 0.0;
  double density = 0.0;
  double ratio_density = 0.0;
  std::optional<FoundAt> found_at;
  std::optional<std::string> start_side;
  std::map<std::string, double> bounds;
  std::map<std::string, std::uint64_t> work;
  std::optional<double> wall_time_ms;
};

ResultRecord MakeRecord(const BipartiteGraph& g, std::string kind,
                        const Subgraph& subgraph);
// Adds found_at, start side, bound values and work counters of a run.
void AttachRun(ResultRecord& record, const DensityResult& result);

std::string ToJsonLine(const ResultRecord& record);
// Trace steps are written as records of kind "step".
std::string StepToJsonLine(const StepRecord& step, Side start_side);

// Reads result records back, skipping records of other kinds (such as trace
// steps). Throws kParseError on malformed lines.
std::vector<ResultRecord> ParseResultDocument(std::istream& in);

// d(S, T) recomputed from the ids in `record`. Throws kUnknownVertex.
double RecomputeDensity(const BipartiteGraph& g, const ResultRecord& record);

}  // namespace locdense

#endif  // LOCDENSE_RESULT_DOCUMENT_H_
