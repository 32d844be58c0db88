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

#ifndef LOCDENSE_ORACLE_H_
#define LOCDENSE_ORACLE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "locdense/bipartite_graph.h"
#include "locdense/density.h"

namespace locdense {

// Exact d(A) by enumerating every nonempty subset S of the smaller side. For
// a fixed S the best T of size j is the j opposite vertices with the most
// weight into S, so only prefixes of that ordering are scored. Ties keep the
// first subset in increasing bitmask order, then the smallest j.
// Throws kTooLarge if the smaller side exceeds `side_cap`.
Subgraph ExactDensest(const BipartiteGraph& g, std::size_t side_cap = 20);

struct EigenEstimate {
  double value = 0.0;           // lambda-hat
  std::vector<double> vector;   // phi-hat, indexed by Vertex, unit, >= 0
  double residual = 0.0;        // |phi-hat A - lambda-hat phi-hat|
  int iterations = 0;
  bool converged = false;
};

// Power iteration on the two-step product A^2 restricted to the left side,
// started from the all-ones vector. The left part p and q = pA / |pA| are
// combined into phi = (p + q) / sqrt(2), whose Rayleigh quotient is |pA|.
// Stops once the relative change of the estimate and the relative residual
// are both below `tol`; otherwise returns the last iterate with
// converged = false.
EigenEstimate TopEigenvalue(const BipartiteGraph& g, double tol = 1e-9,
                            int max_iters = 10000);

using SparseCertificate = std::vector<std::pair<Vertex, double>>;

// min over Support(psi) of (psi A)(u) - theta psi(u), using the full graph.
double CertificateMargin(const BipartiteGraph& g, const SparseCertificate& psi,
                         double theta);

struct SeedCertificate {
  Vertex vertex;
  std::size_t certificate;  // index into GoodSeedReport::certificates
  double psi_value;
  double margin;
};

struct GoodSeedReport {
  VertexSet good_set;  // a good set, not necessarily the largest one
  std::vector<SparseCertificate> certificates;
  std::vector<SeedCertificate> seeds;
  double threshold = 0.0;  // 1 / sqrt(2 |S|)
  double coverage = 0.0;   // e(G, T) / e(S, T)
};

// Peels S: while the principal eigenvector psi of A restricted to (S', T)
// has eigenvalue >= theta, every v in S' with psi(v) >= 1/sqrt(2|S|) joins
// the good set with psi as its certificate and leaves S'.
// Throws kPreconditionFailed if d(S, T) < 2 theta.
GoodSeedReport GoodSeedSet(const BipartiteGraph& g,
                           std::span<const Vertex> left,
                           std::span<const Vertex> right, double theta);

}  // namespace locdense

#endif  // LOCDENSE_ORACLE_H_
