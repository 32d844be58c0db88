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

#include "locdense/result_document.h"

#include <istream>
#include <string>
#include <utility>

#include "json.hpp"
#include "locdense/error.h"

namespace locdense {
namespace {

using nlohmann::json;

json LevelsJson(const LevelSets& levels) {
  json out = json::array();
  for (const Level& level : levels) {
    out.push_back({{"exponent", level.exponent},
                   {"size", level.vertices.size()}});
  }
  return out;
}

template <typename T>
void PutOptional(json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <typename T>
std::optional<T> GetOptional(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  return it->template get<T>();
}

}  // namespace

ResultRecord MakeRecord(const BipartiteGraph& g, std::string kind,
                        const Subgraph& subgraph) {
  ResultRecord record;
  record.kind = std::move(kind);
  for (Vertex v : subgraph.left()) record.left_ids.push_back(g.id(v));
  for (Vertex v : subgraph.right()) record.right_ids.push_back(g.id(v));
  record.edge_weight = subgraph.edge_weight();
  record.density = subgraph.density();
  record.ratio_density =
      subgraph.edge_weight() /
      static_cast<double>(subgraph.left().size() + subgraph.right().size());
  return record;
}

void AttachRun(ResultRecord& record, const DensityResult& result) {
  record.found_at = result.found_at;
  record.start_side = std::string(SideName(result.start_side));
  record.bounds["bound_divisor"] = result.bound_divisor;
  record.bounds["log_factor_weighted"] = result.log_factor_weighted;
  record.bounds["log_factor_fanout"] = result.log_factor_fanout;
  // No (S, T) with d(S, T) >= 2 theta can have a guaranteed start here
  // unless theta <= density * bound_divisor.
  record.bounds["theta_ceiling"] =
      result.subgraph.density() * result.bound_divisor;
  record.work["edges_touched"] = result.work.edges_touched;
  record.work["steps"] = result.work.steps;
  record.work["max_support"] = result.work.max_support;
}

std::string ToJsonLine(const ResultRecord& r) {
  json j;
  j["kind"] = r.kind;
  PutOptional(j, "seed", r.seed);
  PutOptional(j, "seed_side", r.seed_side);
  PutOptional(j, "target_size", r.target_size);
  j["S"] = r.left_ids;
  j["T"] = r.right_ids;
  j["size_S"] = r.left_ids.size();
  j["size_T"] = r.right_ids.size();
  j["e"] = r.edge_weight;
  j["d"] = r.density;
  j["g"] = r.ratio_density;
  if (r.found_at) {
    j["found_at"] = {{"t", r.found_at->t},
                     {"i", r.found_at->i},
                     {"j", r.found_at->j}};
  }
  PutOptional(j, "start_side", r.start_side);
  if (!r.bounds.empty()) j["bounds"] = r.bounds;
  if (!r.work.empty()) j["work"] = r.work;
  PutOptional(j, "wall_time_ms", r.wall_time_ms);
  return j.dump();
}

std::string StepToJsonLine(const StepRecord& s, Side start_side) {
  json j;
  j["kind"] = "step";
  j["start_side"] = std::string(SideName(start_side));
  j["t"] = s.t;
  j["epsilon"] = s.epsilon;
  j["epsilon_next"] = s.epsilon_next;
  j["support"] = s.x.support_size();
  j["norm"] = s.x.norm();
  j["x_levels"] = LevelsJson(s.x_levels);
  j["rounded_levels"] = LevelsJson(s.rounded_levels);
  j["rounded_norm"] = s.rounded_norm;
  j["pruned_mass"] = s.pruned_mass;
  j["removed"] = s.removed;
  j["next_support"] = s.next_support;
  j["max_pair_density"] = s.max_pair_density;
  j["best_pair"] = {s.best_i, s.best_j};
  j["best_so_far"] = s.best_so_far;
  j["edges_touched"] = s.edges_touched;
  return j.dump();
}

std::vector<ResultRecord> ParseResultDocument(std::istream& in) {
  std::vector<ResultRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      const std::string kind = j.at("kind").get<std::string>();
      if (kind != "local" && kind != "global" && kind != "exact" &&
          kind != "scan") {
        continue;
      }
      ResultRecord r;
      r.kind = kind;
      r.seed = GetOptional<std::string>(j, "seed");
      r.seed_side = GetOptional<std::string>(j, "seed_side");
      r.target_size = GetOptional<long>(j, "target_size");
      r.left_ids = j.at("S").get<std::vector<std::string>>();
      r.right_ids = j.at("T").get<std::vector<std::string>>();
      r.edge_weight = j.at("e").get<double>();
      r.density = j.at("d").get<double>();
      r.ratio_density = j.at("g").get<double>();
      if (auto it = j.find("found_at"); it != j.end()) {
        r.found_at = FoundAt{it->at("t").get<int>(), it->at("i").get<int>(),
                             it->at("j").get<int>()};
      }
      r.start_side = GetOptional<std::string>(j, "start_side");
      if (auto it = j.find("bounds"); it != j.end()) {
        r.bounds = it->get<std::map<std::string, double>>();
      }
      if (auto it = j.find("work"); it != j.end()) {
        r.work = it->get<std::map<std::string, std::uint64_t>>();
      }
      r.wall_time_ms = GetOptional<double>(j, "wall_time_ms");
      records.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  "result line " + std::to_string(line_no) + ": " + e.what(),
                  line_no);
    }
  }
  return records;
}

double RecomputeDensity(const BipartiteGraph& g, const ResultRecord& record) {
  auto resolve = [&g](const std::vector<std::string>& ids, Side side) {
    VertexSet set;
    for (const std::string& id : ids) {
      auto v = g.Find(side, id);
      if (!v) {
        throw Error(ErrorCode::kUnknownVertex, "unknown vertex id " + id);
      }
      set.push_back(*v);
    }
    return set;
  };
  return Subgraph::Of(g, resolve(record.left_ids, Side::kLeft),
                      resolve(record.right_ids, Side::kRight))
      .density();
}

}  // namespace locdense
