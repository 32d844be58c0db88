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

#ifndef LOCDENSE_EDGE_LIST_H_
#define LOCDENSE_EDGE_LIST_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "locdense/bipartite_graph.h"

namespace locdense {

enum class EdgeListMode { kBipartite, kDirected };

// Text edge list: one `left right [weight]` per line (or `src dst [weight]`
// in directed mode), whitespace separated. Lines whose first token starts
// with '#' are comments. A `@mode bipartite|directed` directive may appear
// before the first edge. Missing weights are 1.
struct EdgeListFile {
  std::optional<EdgeListMode> declared_mode;
  std::vector<Edge> edges;
};

// Throws kParseError with the 1-based line and column of the offending
// token.
EdgeListFile ParseEdgeList(std::string_view text);

// `requested` wins over a missing directive and must agree with a present
// one. Throws kIoError, kParseError, and the graph build errors.
BipartiteGraph LoadEdgeList(const std::filesystem::path& path,
                            std::optional<EdgeListMode> requested = {});
BipartiteGraph BuildFromEdgeList(const EdgeListFile& file,
                                 std::optional<EdgeListMode> requested = {});

// Writes `@mode bipartite` followed by every edge with its weight in
// shortest round-trip form. Throws kDomainError for ids the parser could
// not read back.
void WriteEdgeList(const BipartiteGraph& g, std::ostream& out);

}  // namespace locdense

#endif  // LOCDENSE_EDGE_LIST_H_
