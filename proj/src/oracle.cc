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

#include "locdense/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <string>

#include "locdense/error.h"

namespace locdense {
namespace {

double Norm(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

// out[w - base_out] = sum over u of in[u - base_in] * A(u, w), for in on
// one side and out on the other.
void SideProduct(const BipartiteGraph& g, const std::vector<double>& in,
                 Vertex base_in, std::vector<double>& out, Vertex base_out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (in[k] == 0.0) continue;
    for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(base_in + k))) {
      out[nb.vertex - base_out] += in[k] * nb.weight;
    }
  }
}

}  // namespace

Subgraph ExactDensest(const BipartiteGraph& g, std::size_t side_cap) {
  const bool left_small = g.left_count() <= g.right_count();
  const std::size_t small = left_small ? g.left_count() : g.right_count();
  if (small > side_cap || small >= 63) {
    throw Error(ErrorCode::kTooLarge,
                "smaller side has " + std::to_string(small) +
                    " vertices, cap is " + std::to_string(side_cap));
  }
  const Vertex small_base =
      left_small ? Vertex{0} : static_cast<Vertex>(g.left_count());
  const Vertex other_base =
      left_small ? static_cast<Vertex>(g.left_count()) : Vertex{0};
  const std::size_t other =
      left_small ? g.right_count() : g.left_count();

  std::vector<double> into(other, 0.0);
  std::vector<std::uint32_t> touched;
  double best = -1.0;
  std::uint64_t best_mask = 0;
  std::vector<std::uint32_t> best_other;

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << small); ++mask) {
    touched.clear();
    for (std::size_t b = 0; b < small; ++b) {
      if (!(mask >> b & 1)) continue;
      for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(small_base + b))) {
        const std::uint32_t o = nb.vertex - other_base;
        if (into[o] == 0.0) touched.push_back(o);
        into[o] += nb.weight;
      }
    }
    std::sort(touched.begin(), touched.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                return into[a] != into[b] ? into[a] > into[b] : a < b;
              });
    const double size_s = static_cast<double>(std::popcount(mask));
    double prefix = 0.0;
    std::size_t best_j = 0;
    double best_here = -1.0;
    for (std::size_t j = 0; j < touched.size(); ++j) {
      prefix += into[touched[j]];
      const double d = prefix / std::sqrt(size_s * static_cast<double>(j + 1));
      if (d > best_here) {
        best_here = d;
        best_j = j + 1;
      }
    }
    if (best_here > best) {
      best = best_here;
      best_mask = mask;
      best_other.assign(touched.begin(), touched.begin() + best_j);
    }
    for (std::uint32_t o : touched) into[o] = 0.0;
  }

  VertexSet small_set, other_set;
  for (std::size_t b = 0; b < small; ++b) {
    if (best_mask >> b & 1) small_set.push_back(static_cast<Vertex>(small_base + b));
  }
  for (std::uint32_t o : best_other) other_set.push_back(other_base + o);
  return left_small ? Subgraph::Of(g, small_set, other_set)
                    : Subgraph::Of(g, other_set, small_set);
}

EigenEstimate TopEigenvalue(const BipartiteGraph& g, double tol,
                            int max_iters) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "eigenvalue of an empty graph");
  }
  const Vertex left_base = 0;
  const Vertex right_base = static_cast<Vertex>(g.left_count());
  std::vector<double> p(g.left_count(),
                        1.0 / std::sqrt(static_cast<double>(g.left_count())));
  std::vector<double> q(g.right_count());
  std::vector<double> back(g.left_count());

  EigenEstimate est;
  double previous = 0.0;
  for (int iter = 1; iter <= max_iters; ++iter) {
    SideProduct(g, p, left_base, q, right_base);
    const double value = Norm(q);
    for (double& x : q) x /= value;
    SideProduct(g, q, right_base, back, left_base);
    // residual of phi = (p, q)/sqrt(2): |qA - value p| / sqrt(2).
    double res2 = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double r = back[k] - value * p[k];
      res2 += r * r;
    }
    const double residual = std::sqrt(res2 / 2.0);

    est.value = value;
    est.residual = residual;
    est.iterations = iter;
    const bool settled = std::abs(value - previous) < tol * value;
    if (settled && residual < tol * value) {
      est.converged = true;
      break;
    }
    previous = value;
    if (iter == max_iters) break;
    const double back_norm = Norm(back);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = back[k] / back_norm;
  }

  est.vector.assign(g.vertex_count(), 0.0);
  const double half = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < p.size(); ++k) est.vector[k] = p[k] * half;
  for (std::size_t k = 0; k < q.size(); ++k) {
    est.vector[right_base + k] = q[k] * half;
  }
  return est;
}

double CertificateMargin(const BipartiteGraph& g, const SparseCertificate& psi,
                         double theta) {
  // psi A evaluated only on Support(psi); psi is sorted by vertex.
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& [u, value] : psi) {
    double product = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) {
      auto it = std::lower_bound(
          psi.begin(), psi.end(), nb.vertex,
          [](const auto& entry, Vertex key) { return entry.first < key; });
      if (it != psi.end() && it->first == nb.vertex) {
        product += it->second * nb.weight;
      }
    }
    margin = std::min(margin, product - theta * value);
  }
  return margin;
}

GoodSeedReport GoodSeedSet(const BipartiteGraph& g,
                           std::span<const Vertex> left,
                           std::span<const Vertex> right, double theta) {
  if (!(theta > 0.0)) {
    throw Error(ErrorCode::kDomainError, "theta must be positive");
  }
  const Subgraph whole = Subgraph::Of(g, left, right);
  if (whole.density() < 2.0 * theta * (1.0 - 1e-12)) {
    throw Error(ErrorCode::kPreconditionFailed,
                "d(S,T) is below 2 theta");
  }
  GoodSeedReport report;
  report.threshold =
      1.0 / std::sqrt(2.0 * static_cast<double>(whole.left().size()));

  VertexSet remaining = whole.left();
  while (!remaining.empty()) {
    std::optional<BipartiteGraph> restricted;
    try {
      restricted.emplace(Restrict(g, remaining, whole.right()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyGraph) throw;
      break;
    }
    const EigenEstimate eig = TopEigenvalue(*restricted);
    if (eig.value < theta) break;

    SparseCertificate psi;
    for (Vertex v = 0; v < eig.vector.size(); ++v) {
      if (eig.vector[v] > 0.0) psi.emplace_back(v, eig.vector[v]);
    }
    VertexSet qualifying;
    for (Vertex v : remaining) {
      if (eig.vector[v] >= report.threshold - 1e-12) qualifying.push_back(v);
    }
    if (qualifying.empty()) break;

    const double margin = CertificateMargin(g, psi, theta);
    const std::size_t index = report.certificates.size();
    for (Vertex v : qualifying) {
      report.seeds.push_back({v, index, eig.vector[v], margin});
    }
    report.certificates.push_back(std::move(psi));
    VertexSet rest;
    std::set_difference(remaining.begin(), remaining.end(),
                        qualifying.begin(), qualifying.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
  }

  for (const SeedCertificate& s : report.seeds) {
    report.good_set.push_back(s.vertex);
  }
  report.good_set = MakeVertexSet(report.good_set);
  report.coverage =
      report.good_set.empty()
          ? 0.0
          : EdgeWeightBetween(g, report.good_set, whole.right()) /
                whole.edge_weight();
  return report;
}

}  // namespace locdense
