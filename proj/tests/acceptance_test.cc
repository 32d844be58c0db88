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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "locdense/bipartite_graph.h"
#include "locdense/density.h"
#include "locdense/edge_list.h"
#include "locdense/error.h"
#include "locdense/global_density.h"
#include "locdense/local_density.h"
#include "locdense/oracle.h"
#include "locdense/planted.h"
#include "test_util.h"

#ifndef LOCDENSE_CLI_PATH
#error "LOCDENSE_CLI_PATH must point at the CLI binary"
#endif

namespace locdense {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kExactRelTol = 1e-12;
constexpr double kMarginTol = 1e-9;
constexpr double kPsiTol = 1e-12;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

// A trace step together with the graph quantity the bounds need.
struct RecordedStep {
  StepRecord step;
  double max_degree;
};

std::vector<RecordedStep>& Recorded() {
  static std::vector<RecordedStep> steps;
  return steps;
}

void Record(const DensityResult& r, double max_degree) {
  for (const GrowthTrace& trace : r.traces) {
    for (const StepRecord& s : trace.steps) {
      Recorded().push_back({s, max_degree});
    }
  }
}

VertexSet OnSide(const BipartiteGraph& g, Side side) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.side(v) == side) out.push_back(v);
  }
  return out;
}

Outcome ClosedForms() {
  Outcome o;
  auto start = Clock::now();
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      BipartiteGraph g = testing::Complete(a, b);
      double want = std::sqrt(double(a) * b);
      VertexSet l = OnSide(g, Side::kLeft);
      VertexSet r = OnSide(g, Side::kRight);
      double exact = ExactDensest(g).density();
      double direct = Density(g, l, r).density();
      double ratio = RatioDensity(g, l, r);
      double want_ratio = double(a) * b / (a + b);
      if (std::abs(exact - want) > kExactRelTol * want ||
          std::abs(direct - want) > kExactRelTol * want ||
          std::abs(ratio - want_ratio) > kExactRelTol * want_ratio) {
        o.Fail("K_{" + std::to_string(a) + "," + std::to_string(b) + "}");
      }
    }
  }
  if (Seconds(start) >= 1.0) o.Fail("runtime over 1 s");
  return o;
}

Outcome OracleConsistency() {
  Outcome o;
  auto start = Clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> side(1, 8);
  std::uniform_real_distribution<double> prob(0.1, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    BipartiteGraph g = testing::RandomGraph(rng, side(rng), side(rng),
                                            prob(rng), trial % 2 == 0);
    testing::NaiveBest naive = testing::NaiveDensest(g);
    Subgraph exact = ExactDensest(g);
    // Recompute the achieved density of the returned sets from the dense
    // matrix, so a wrong set cannot hide behind a right number.
    auto a = testing::DenseAdjacency(g);
    double e = 0.0;
    for (Vertex u : exact.left()) {
      for (Vertex v : exact.right()) e += a[u][v];
    }
    double achieved =
        e / std::sqrt(double(exact.left().size() * exact.right().size()));
    double tol = kExactRelTol * naive.density;
    if (std::abs(exact.density() - naive.density) > tol ||
        std::abs(achieved - naive.density) > tol) {
      o.Fail("trial " + std::to_string(trial));
    }
  }
  if (Seconds(start) >= 30.0) o.Fail("runtime over 30 s");
  return o;
}

Outcome SpectralUpperBound() {
  Outcome o;
  auto start = Clock::now();
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<int> small(2, 12);
  std::uniform_real_distribution<double> prob(0.1, 0.7);
  for (int trial = 0; trial < 100; ++trial) {
    int a = small(rng);
    int b = std::uniform_int_distribution<int>(2, 40 - a)(rng);
    BipartiteGraph g = testing::RandomGraph(rng, a, b, prob(rng), true);
    EigenEstimate eig = TopEigenvalue(g);
    double d = ExactDensest(g).density();
    if (!(eig.value + eig.residual >= d)) {
      o.Fail("trial " + std::to_string(trial) + ": " +
             std::to_string(eig.value + eig.residual) + " < " +
             std::to_string(d));
    }
  }
  if (Seconds(start) >= 30.0) o.Fail("runtime over 30 s");
  return o;
}

std::vector<PlantedInstance>& PlantedInstances() {
  static std::vector<PlantedInstance> instances = [] {
    std::vector<PlantedInstance> out;
    std::mt19937_64 rng(3003);
    std::uniform_int_distribution<int> block(3, 8);
    std::uniform_int_distribution<int> extra(10, 60);
    for (int k = 0; k < 50; ++k) {
      PlantedSpec spec;
      spec.block_left = block(rng);
      spec.block_right = block(rng);
      spec.left_count = spec.block_left + extra(rng);
      spec.right_count = spec.block_right + extra(rng);
      std::size_t block_edges = spec.block_left * spec.block_right;
      spec.noise_edges =
          std::uniform_int_distribution<std::size_t>(0, 4 * block_edges)(rng);
      spec.seed = 100 + k;
      out.push_back(GeneratePlanted(spec));
    }
    return out;
  }();
  return instances;
}

Outcome LocalGuarantee() {
  Outcome o;
  auto start = Clock::now();
  int k = 0;
  std::size_t seeds_run = 0;
  double min_ratio = INFINITY;
  for (const PlantedInstance& inst : PlantedInstances()) {
    const BipartiteGraph& g = inst.graph;
    double theta = Density(g, inst.left, inst.right).density() / 2;
    long target =
        static_cast<long>(std::max(inst.left.size(), inst.right.size()));
    double bound = LocalGuaranteeBound(theta, g.max_degree(), target);
    GoodSeedReport rep = GoodSeedSet(g, inst.left, inst.right, theta);
    bool any = false;
    double best = 0.0;
    for (Vertex v : rep.good_set) {
      DensityResult r = LocalDensity(g, v, target, true);
      Record(r, g.max_degree());
      if (r.subgraph.density() >= bound) any = true;
      best = std::max(best, r.subgraph.density());
      ++seeds_run;
    }
    if (!any) o.Fail("instance " + std::to_string(k));
    min_ratio = std::min(min_ratio, best / bound);
    ++k;
  }
  o.detail += std::to_string(seeds_run) + " good seeds run, min best/bound " +
              std::to_string(min_ratio);
  if (Seconds(start) >= 120.0) o.Fail("runtime over 2 min");
  return o;
}

Outcome GoodSetCoverage() {
  Outcome o;
  int k = 0;
  for (const PlantedInstance& inst : PlantedInstances()) {
    const BipartiteGraph& g = inst.graph;
    double theta = Density(g, inst.left, inst.right).density() / 2;
    GoodSeedReport rep = GoodSeedSet(g, inst.left, inst.right, theta);
    std::string where = "instance " + std::to_string(k++);
    if (rep.coverage < 0.5) o.Fail(where + " coverage");
    double threshold = 1.0 / std::sqrt(2.0 * double(inst.left.size()));
    // Recompute each certificate margin from the dense matrix.
    auto a = testing::DenseAdjacency(g);
    for (const SeedCertificate& seed : rep.seeds) {
      const SparseCertificate& psi = rep.certificates.at(seed.certificate);
      std::vector<double> dense(g.vertex_count(), 0.0);
      for (const auto& [v, value] : psi) {
        bool in_s = std::binary_search(inst.left.begin(), inst.left.end(), v);
        bool in_t =
            std::binary_search(inst.right.begin(), inst.right.end(), v);
        if (!in_s && !in_t) o.Fail(where + " support");
        dense[v] = value;
      }
      double margin = INFINITY;
      for (const auto& [u, value] : psi) {
        double au = 0.0;
        for (Vertex w = 0; w < g.vertex_count(); ++w) au += dense[w] * a[w][u];
        margin = std::min(margin, au - theta * value);
      }
      if (margin < -kMarginTol) o.Fail(where + " margin");
      if (dense[seed.vertex] < threshold - kPsiTol) o.Fail(where + " psi");
    }
  }
  return o;
}

Outcome GlobalGuarantee() {
  Outcome o;
  auto start = Clock::now();
  std::mt19937_64 rng(4004);
  for (int k = 0; k < 50; ++k) {
    BipartiteGraph g = [&] {
      if (k % 2 == 0) {
        std::uniform_int_distribution<int> side(5, 1000);
        int a = side(rng);
        int b = side(rng);
        double avg = std::uniform_real_distribution<double>(1.0, 6.0)(rng);
        double p = std::min(1.0, avg / std::min(a, b));
        return testing::RandomGraph(rng, a, b, p, k % 4 == 0);
      }
      PlantedSpec spec;
      spec.block_left = std::uniform_int_distribution<int>(3, 12)(rng);
      spec.block_right = std::uniform_int_distribution<int>(3, 12)(rng);
      spec.left_count = std::uniform_int_distribution<int>(50, 1000)(rng);
      spec.right_count = std::uniform_int_distribution<int>(50, 1000)(rng);
      spec.noise_edges = std::uniform_int_distribution<std::size_t>(
          spec.left_count, 3 * spec.left_count)(rng);
      spec.density_factor = k % 3 == 0 ? 0.7 : 1.0;
      spec.seed = 500 + k;
      return GeneratePlanted(spec).graph;
    }();
    if (g.vertex_count() > 2000) o.Fail("graph too large");
    DensityResult r = GlobalDensity(g, true);
    Record(r, g.max_degree());
    EigenEstimate eig = TopEigenvalue(g);
    double bound = GlobalGuaranteeBound(eig.value, g.vertex_count());
    if (!(r.subgraph.density() >= bound)) {
      o.Fail("graph " + std::to_string(k));
    }
  }
  if (Seconds(start) >= 120.0) o.Fail("runtime over 2 min");
  return o;
}

Outcome SupportAndLevels() {
  Outcome o;
  std::size_t violations = 0;
  for (const RecordedStep& r : Recorded()) {
    const StepRecord& s = r.step;
    if (s.epsilon > 0 &&
        double(s.x.support_size()) > 1.0 / (s.epsilon * s.epsilon)) {
      ++violations;
    }
    double levels =
        std::ceil(std::log2(2.0 * r.max_degree / s.epsilon)) + 1.0;
    if (double(s.rounded_levels.size()) > levels) ++violations;
  }
  if (Recorded().empty()) o.Fail("no recorded steps");
  if (violations) o.Fail(std::to_string(violations) + " violations");
  o.detail += std::to_string(Recorded().size()) + " steps";
  return o;
}

Outcome GrowthLemma() {
  Outcome o;
  std::size_t violations = 0;
  for (const RecordedStep& r : Recorded()) {
    const StepRecord& s = r.step;
    double theta = s.max_pair_density;
    double bound = 2.0 * theta * s.x.norm() *
                   std::log2(2.0 * r.max_degree / s.epsilon);
    if (s.rounded_norm > bound) ++violations;
  }
  if (Recorded().empty()) o.Fail("no recorded steps");
  if (violations) o.Fail(std::to_string(violations) + " violations");
  o.detail += std::to_string(Recorded().size()) + " steps";
  return o;
}

Outcome Locality() {
  Outcome o;
  auto start = Clock::now();
  std::vector<std::size_t> touched;
  std::vector<double> per_run;
  std::string sizes;
  for (std::size_t n : {10000u, 100000u, 1000000u}) {
    PlantedSpec spec;
    spec.block_left = 4;
    spec.block_right = 4;
    spec.left_count = 4 + n / 2;
    spec.right_count = 4 + n / 2;
    spec.noise_edges = n;
    spec.detach_block = true;
    spec.seed = 77;
    PlantedInstance inst = GeneratePlanted(spec);
    sizes += " n=" + std::to_string(inst.graph.vertex_count());
    const Vertex seed = inst.left[0];
    DensityResult first = LocalDensity(inst.graph, seed, 4);
    if (first.subgraph.density() != 4.0) o.Fail("block not recovered");
    touched.push_back(first.work.edges_touched);
    // Median over batches of many runs, after one warm-up batch.
    constexpr int kRuns = 2000;
    std::vector<double> batches;
    for (int batch = 0; batch < 8; ++batch) {
      auto t0 = Clock::now();
      for (int k = 0; k < kRuns; ++k) {
        DensityResult r = LocalDensity(inst.graph, seed, 4);
        if (r.work.edges_touched != first.work.edges_touched) {
          o.Fail("counter changed between runs");
        }
      }
      if (batch > 0) batches.push_back(Seconds(t0) / kRuns);
    }
    std::sort(batches.begin(), batches.end());
    per_run.push_back(batches[batches.size() / 2]);
  }
  if (touched[0] != touched[1] || touched[1] != touched[2]) {
    o.Fail("edges touched differ");
  }
  auto [lo, hi] = std::minmax_element(per_run.begin(), per_run.end());
  double ratio = *hi / *lo;
  if (!(ratio < 2.0)) o.Fail("time ratio " + std::to_string(ratio));
  if (Seconds(start) >= 180.0) o.Fail("runtime over 3 min");
  o.detail += sizes + " edges_touched=" + std::to_string(touched[0]) +
              " time_ratio=" + std::to_string(ratio);
  return o;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome Determinism() {
  Outcome o;
  fs::path dir = fs::temp_directory_path() /
                 ("locdense_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string cli = LOCDENSE_CLI_PATH;
  auto p = [&](const std::string& name) { return (dir / name).string(); };
  std::ofstream(dir / "k23.tsv")
      << "l0 r0\nl0 r1\nl0 r2\nl1 r0\nl1 r1\nl1 r2\n";
  std::ofstream(dir / "arcs.tsv") << "x y\ny z\nz x\nx z 2\n";
  int gen = std::system((cli + " generate --left 60 --right 50 --noise 150 "
                                "--block-left 5 --block-right 4 --rng-seed 9 "
                                "--out " + p("planted.tsv") + " --planted-out " +
                         p("planted") + " > /dev/null")
                            .c_str());
  if (gen != 0) o.Fail("generate failed");
  // Planted vertices always have edges, so their ids are in the file.
  std::string seed;
  std::ifstream(dir / "planted.S") >> seed;
  if (seed.empty()) o.Fail("no planted ids");
  const std::vector<std::string> commands = {
      "stats " + p("k23.tsv"),
      "stats " + p("arcs.tsv") + " --directed",
      "local " + p("planted.tsv") + " --seed " + seed + " --target-size 6 --trace",
      "local " + p("arcs.tsv") + " --directed --seed x --target-size 3",
      "global " + p("planted.tsv") + " --trace",
      "exact " + p("k23.tsv"),
      "scan " + p("planted.tsv") + " --seeds all --target-size 6 --top 5 "
          "--parallel 4",
      "verify " + p("planted.tsv") + " --planted " + p("planted.S") + " " +
          p("planted.T"),
      "generate --left 30 --right 30 --noise 40 --block-left 3 "
          "--block-right 3 --rng-seed 4",
  };
  for (const std::string& args : commands) {
    std::string outs[2];
    int status[2];
    for (int run = 0; run < 2; ++run) {
      fs::path capture = dir / ("run" + std::to_string(run));
      status[run] = std::system(
          (cli + " " + args + " > " + capture.string() + " 2> /dev/null")
              .c_str());
      outs[run] = Slurp(capture);
    }
    if (status[0] != 0) o.Fail("nonzero exit: " + args);
    if (outs[0].empty()) o.Fail("empty output: " + args);
    if (outs[0] != outs[1] || status[0] != status[1]) {
      o.Fail("differs: " + args);
    }
  }
  // Documents written with --out must match too.
  std::string files[2];
  for (int run = 0; run < 2; ++run) {
    fs::path out = dir / ("doc" + std::to_string(run) + ".jsonl");
    int status = std::system((cli + " local " + p("planted.tsv") +
                              " --seed " + seed + " --target-size 5 --out " +
                              out.string())
                                 .c_str());
    if (status != 0) o.Fail("local --out failed");
    files[run] = Slurp(out);
  }
  if (files[0].empty() || files[0] != files[1]) o.Fail("--out differs");
  fs::remove_all(dir);
  o.detail += std::to_string(commands.size() + 1) + " invocations";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace locdense

int main() {
  using namespace locdense;
  const Criterion criteria[] = {
      {"closed-form densities", ClosedForms},
      {"exact oracle self-consistency", OracleConsistency},
      {"spectral upper bound", SpectralUpperBound},
      {"local guarantee on planted instances", LocalGuarantee},
      {"good-set coverage", GoodSetCoverage},
      {"global guarantee", GlobalGuarantee},
      {"support and level bounds", SupportAndLevels},
      {"growth lemma", GrowthLemma},
      {"locality", Locality},
      {"determinism", Determinism},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d %s: %s (%.2f s)%s%s\n", index,
                o.passed ? "PASS" : "FAIL", c.name, Seconds(start),
                o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
