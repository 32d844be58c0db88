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

// Command-line front end: stats | local | global | exact | scan | verify |
// generate. Results go to stdout (or --out) as line-delimited JSON records.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification
// failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "locdense/bipartite_graph.h"
#include "locdense/density.h"
#include "locdense/edge_list.h"
#include "locdense/error.h"
#include "locdense/global_density.h"
#include "locdense/local_density.h"
#include "locdense/oracle.h"
#include "locdense/planted.h"
#include "locdense/result_document.h"
#include "locdense/verify.h"

namespace {

using locdense::BipartiteGraph;
using locdense::Error;
using locdense::ErrorCode;
using locdense::Side;
using locdense::Vertex;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

struct Common {
  std::string graph_path;
  bool directed = false;
  std::string out_path;
  bool timing = false;
};

BipartiteGraph Load(const Common& c) {
  return locdense::LoadEdgeList(
      c.graph_path, c.directed ? std::optional(locdense::EdgeListMode::kDirected)
                               : std::nullopt);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::kIoError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Vertex ResolveSeed(const BipartiteGraph& g, const std::string& id,
                   const std::string& side) {
  std::optional<Vertex> v;
  if (side == "left" || side == "auto") v = g.Find(Side::kLeft, id);
  if (!v && (side == "right" || side == "auto")) v = g.Find(Side::kRight, id);
  if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown seed " + id);
  return *v;
}

std::vector<std::string> ReadIdFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::vector<std::string> ids;
  std::string token;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    if (!(words >> token) || token.front() == '#') continue;
    ids.push_back(token);
  }
  return ids;
}

locdense::VertexSet ResolveIds(const BipartiteGraph& g,
                               const std::vector<std::string>& ids,
                               Side side) {
  locdense::VertexSet set;
  for (const std::string& id : ids) {
    auto v = g.Find(side, id);
    if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex " + id);
    set.push_back(*v);
  }
  return locdense::MakeVertexSet(set);
}

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void WriteTraces(std::ostream& out, const locdense::DensityResult& result) {
  for (const locdense::GrowthTrace& trace : result.traces) {
    for (const locdense::StepRecord& step : trace.steps) {
      out << locdense::StepToJsonLine(step, trace.start_side) << '\n';
    }
  }
}

void AddCommon(CLI::App* cmd, Common& c, bool with_out) {
  cmd->add_option("file", c.graph_path, "Edge list file")->required();
  cmd->add_flag("--directed", c.directed,
                "Read src dst arcs and apply the bipartite reduction");
  if (with_out) {
    cmd->add_option("--out", c.out_path, "Write records here instead of stdout");
    cmd->add_flag("--timing", c.timing,
                  "Include wall_time_ms (makes output run-dependent)");
  }
}

std::string VerifyFooter() {
  std::string text = "Properties:\n";
  for (std::string_view name : locdense::VerificationProperties()) {
    text += "  " + std::string(name) + "\n";
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local and global dense subgraph discovery in bipartite graphs"};
  app.require_subcommand(1);

  Common stats_c;
  auto* stats = app.add_subcommand("stats", "Print n, m, max degree, fanout");
  AddCommon(stats, stats_c, false);

  Common local_c;
  std::string seed, seed_side = "auto";
  long target_size = 0;
  bool trace = false;
  auto* local = app.add_subcommand("local", "Local search from one vertex");
  AddCommon(local, local_c, true);
  local->add_option("--seed", seed, "Starting vertex id")->required();
  local->add_option("--seed-side", seed_side, "Side of the seed id")
      ->check(CLI::IsMember({"auto", "left", "right"}));
  local->add_option("--target-size", target_size, "Target size K")
      ->required()
      ->check(CLI::PositiveNumber);
  local->add_flag("--trace", trace, "Also emit one record per step");

  Common global_c;
  bool global_trace = false;
  auto* global = app.add_subcommand("global", "Global approximation");
  AddCommon(global, global_c, true);
  global->add_flag("--trace", global_trace, "Also emit one record per step");

  Common exact_c;
  std::size_t side_cap = 20;
  auto* exact = app.add_subcommand("exact", "Exact densest subgraph");
  AddCommon(exact, exact_c, true);
  exact->add_option("--side-cap", side_cap, "Largest smaller side to enumerate");

  Common scan_c;
  std::string seeds_arg, scan_side = "auto";
  long scan_k = 0;
  std::size_t top = 10;
  unsigned parallel = 0;
  auto* scan = app.add_subcommand("scan", "Local search from many seeds");
  AddCommon(scan, scan_c, true);
  scan->add_option("--seeds", seeds_arg, "'all' or a file of seed ids")
      ->required();
  scan->add_option("--seed-side", scan_side, "Side of the seed ids")
      ->check(CLI::IsMember({"auto", "left", "right"}));
  scan->add_option("--target-size", scan_k, "Target size K")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--top", top, "Number of results to keep");
  scan->add_option("--parallel", parallel,
                   "Concurrent runs (default: hardware threads)");

  Common verify_c;
  std::optional<double> theta;
  std::vector<std::string> planted_files;
  locdense::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Check algorithm invariants");
  AddCommon(verify, verify_c, true);
  verify->add_option("--theta", theta, "Theta for the planted checks");
  verify->add_option("--planted", planted_files, "S-file T-file")
      ->expected(2);
  verify->add_option("--target-size", verify_options.target_size,
                     "K for the sampled local runs");
  verify->add_option("--local-seeds", verify_options.local_seeds,
                     "Number of sampled local runs");
  verify->add_option("--exact-cap", verify_options.exact_side_cap,
                     "Side cap for the exact oracle");
  verify->footer(VerifyFooter());

  locdense::PlantedSpec planted_spec;
  std::string generate_out, planted_prefix;
  auto* generate = app.add_subcommand("generate", "Write a planted instance");
  generate->add_option("--left", planted_spec.left_count)->required();
  generate->add_option("--right", planted_spec.right_count)->required();
  generate->add_option("--noise", planted_spec.noise_edges);
  generate->add_option("--block-left", planted_spec.block_left)->required();
  generate->add_option("--block-right", planted_spec.block_right)->required();
  generate->add_option("--factor", planted_spec.density_factor);
  generate->add_option("--rng-seed", planted_spec.seed);
  generate->add_flag("--detach", planted_spec.detach_block,
                     "Keep noise away from the block");
  generate->add_option("--out", generate_out, "Edge list path (default stdout)");
  generate->add_option("--planted-out", planted_prefix,
                       "Write <prefix>.S and <prefix>.T id files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*stats) {
      const BipartiteGraph g = Load(stats_c);
      const locdense::DegreeStats s = locdense::GetDegreeStats(g);
      nlohmann::json j = {{"kind", "stats"},
                          {"n", s.vertex_count},
                          {"left", g.left_count()},
                          {"right", g.right_count()},
                          {"edges", s.edge_count},
                          {"m", s.total_weight},
                          {"max_degree", s.max_degree},
                          {"max_fanout", s.max_fanout},
                          {"average_degree", s.average_degree}};
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (*local) {
      const BipartiteGraph g = Load(local_c);
      Output out(local_c.out_path);
      const Vertex v = ResolveSeed(g, seed, seed_side);
      const auto start = std::chrono::steady_clock::now();
      const locdense::DensityResult result =
          locdense::LocalDensity(g, v, target_size, trace);
      const double elapsed = ElapsedMs(start);
      locdense::ResultRecord record =
          locdense::MakeRecord(g, "local", result.subgraph);
      record.seed = seed;
      record.seed_side = std::string(locdense::SideName(g.side(v)));
      record.target_size = target_size;
      locdense::AttachRun(record, result);
      if (local_c.timing) record.wall_time_ms = elapsed;
      out.stream() << locdense::ToJsonLine(record) << '\n';
      WriteTraces(out.stream(), result);
      return 0;
    }

    if (*global) {
      const BipartiteGraph g = Load(global_c);
      Output out(global_c.out_path);
      const auto start = std::chrono::steady_clock::now();
      const locdense::DensityResult result =
          locdense::GlobalDensity(g, global_trace);
      const double elapsed = ElapsedMs(start);
      const locdense::EigenEstimate eig = locdense::TopEigenvalue(g);
      locdense::ResultRecord record =
          locdense::MakeRecord(g, "global", result.subgraph);
      locdense::AttachRun(record, result);
      record.bounds.erase("theta_ceiling");
      record.bounds["lambda"] = eig.value;
      record.bounds["lambda_residual"] = eig.residual;
      if (g.vertex_count() >= 2) {
        record.bounds["global_bound"] =
            locdense::GlobalGuaranteeBound(eig.value, g.vertex_count());
      }
      if (global_c.timing) record.wall_time_ms = elapsed;
      out.stream() << locdense::ToJsonLine(record) << '\n';
      WriteTraces(out.stream(), result);
      return 0;
    }

    if (*exact) {
      const BipartiteGraph g = Load(exact_c);
      Output out(exact_c.out_path);
      const auto start = std::chrono::steady_clock::now();
      const locdense::Subgraph best = locdense::ExactDensest(g, side_cap);
      locdense::ResultRecord record = locdense::MakeRecord(g, "exact", best);
      if (exact_c.timing) record.wall_time_ms = ElapsedMs(start);
      out.stream() << locdense::ToJsonLine(record) << '\n';
      return 0;
    }

    if (*scan) {
      const BipartiteGraph g = Load(scan_c);
      Output out(scan_c.out_path);
      std::vector<Vertex> seeds;
      if (seeds_arg == "all") {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (scan_side == "auto" ||
              (scan_side == "left") == (g.side(v) == Side::kLeft)) {
            seeds.push_back(v);
          }
        }
      } else {
        for (const std::string& id : ReadIdFile(seeds_arg)) {
          seeds.push_back(ResolveSeed(g, id, scan_side));
        }
      }
      const auto start = std::chrono::steady_clock::now();
      const locdense::ScanResult result =
          locdense::SeedScan(g, seeds, scan_k, top, parallel);
      const double elapsed = ElapsedMs(start);
      for (const locdense::SeedRun& run : result.runs) {
        locdense::ResultRecord record =
            locdense::MakeRecord(g, "scan", run.result.subgraph);
        record.seed = g.id(run.seed);
        record.seed_side = std::string(locdense::SideName(g.side(run.seed)));
        record.target_size = scan_k;
        locdense::AttachRun(record, run.result);
        if (scan_c.timing) record.wall_time_ms = elapsed;
        out.stream() << locdense::ToJsonLine(record) << '\n';
      }
      for (const locdense::SeedFailure& failure : result.failures) {
        nlohmann::json j = {
            {"kind", "seed_failure"},
            {"seed", g.id(failure.seed)},
            {"error", std::string(locdense::ErrorCodeName(failure.code))},
            {"message", failure.message}};
        out.stream() << j.dump() << '\n';
      }
      return 0;
    }

    if (*verify) {
      const BipartiteGraph g = Load(verify_c);
      Output out(verify_c.out_path);
      verify_options.theta = theta;
      if (!planted_files.empty()) {
        verify_options.planted = std::make_pair(
            ResolveIds(g, ReadIdFile(planted_files[0]), Side::kLeft),
            ResolveIds(g, ReadIdFile(planted_files[1]), Side::kRight));
      }
      const std::vector<locdense::PropertyResult> results =
          locdense::RunVerification(g, verify_options);
      bool all_pass = true;
      for (const locdense::PropertyResult& r : results) {
        all_pass = all_pass && r.passed();
        nlohmann::json j = {
            {"kind", "property"},
            {"name", r.name},
            {"status", r.skipped ? "skip" : (r.passed() ? "pass" : "fail")},
            {"checks", r.checks},
            {"violations", r.violations},
            {"detail", r.detail}};
        out.stream() << j.dump() << '\n';
      }
      out.stream() << nlohmann::json{{"kind", "verify_summary"},
                                     {"status", all_pass ? "pass" : "fail"}}
                          .dump()
                   << '\n';
      return all_pass ? 0 : kExitVerify;
    }

    if (*generate) {
      const locdense::PlantedInstance inst =
          locdense::GeneratePlanted(planted_spec);
      if (generate_out.empty()) {
        locdense::WriteEdgeList(inst.graph, std::cout);
      } else {
        std::ofstream out(generate_out, std::ios::binary);
        if (!out) throw Error(ErrorCode::kIoError, "cannot write " + generate_out);
        locdense::WriteEdgeList(inst.graph, out);
      }
      if (!planted_prefix.empty()) {
        std::ofstream s_out(planted_prefix + ".S");
        for (Vertex v : inst.left) s_out << inst.graph.id(v) << '\n';
        std::ofstream t_out(planted_prefix + ".T");
        for (Vertex v : inst.right) t_out << inst.graph.id(v) << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    nlohmann::json j = {{"error", std::string(locdense::ErrorCodeName(e.code()))},
                        {"message", e.what()}};
    if (e.line() != 0) {
      j["line"] = e.line();
      j["column"] = e.column();
    }
    std::cerr << j.dump() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
