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

#include "locdense/edge_list.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "locdense/error.h"

namespace locdense {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' ||
                               line[k] == '\r' || line[k] == '\v' ||
                               line[k] == '\f')) {
      ++k;
    }
    if (k == line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' &&
           line[k] != '\r' && line[k] != '\v' && line[k] != '\f') {
      ++k;
    }
    tokens.push_back({line.substr(start, k - start), start + 1});
  }
  return tokens;
}

double ParseWeight(const Token& token, std::size_t line) {
  double value = 0.0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ": bad weight '" +
                    std::string(token.text) + "'",
                line, token.column);
  }
  if (value < 0.0) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ": negative weight '" +
                    std::string(token.text) + "'",
                line, token.column);
  }
  return value;
}

std::string FormatWeight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

bool ReadableId(const std::string& id) {
  if (id.empty() || id.front() == '#' || id.front() == '@') return false;
  for (char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f') {
      return false;
    }
  }
  return true;
}

}  // namespace

EdgeListFile ParseEdgeList(std::string_view text) {
  EdgeListFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (tokens.front().text.front() == '@') {
      if (tokens.front().text != "@mode" || tokens.size() != 2) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": unknown directive",
                    line_no, tokens.front().column);
      }
      if (!file.edges.empty()) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) +
                        ": directive after the first edge",
                    line_no, tokens.front().column);
      }
      if (tokens[1].text == "bipartite") {
        file.declared_mode = EdgeListMode::kBipartite;
      } else if (tokens[1].text == "directed") {
        file.declared_mode = EdgeListMode::kDirected;
      } else {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": unknown mode '" +
                        std::string(tokens[1].text) + "'",
                    line_no, tokens[1].column);
      }
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected 2 or 3 " +
                      "tokens, found " + std::to_string(tokens.size()),
                  line_no, tokens.front().column);
    }
    Edge edge{std::string(tokens[0].text), std::string(tokens[1].text), 1.0};
    if (tokens.size() == 3) edge.weight = ParseWeight(tokens[2], line_no);
    file.edges.push_back(std::move(edge));
  }
  return file;
}

BipartiteGraph BuildFromEdgeList(const EdgeListFile& file,
                                 std::optional<EdgeListMode> requested) {
  if (requested && file.declared_mode && *requested != *file.declared_mode) {
    throw Error(ErrorCode::kParseError,
                "requested mode disagrees with the file's @mode directive");
  }
  const EdgeListMode mode = requested.value_or(
      file.declared_mode.value_or(EdgeListMode::kBipartite));
  return mode == EdgeListMode::kDirected
             ? BipartiteGraph::FromDirected(file.edges)
             : BipartiteGraph::Build(file.edges);
}

BipartiteGraph LoadEdgeList(const std::filesystem::path& path,
                            std::optional<EdgeListMode> requested) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return BuildFromEdgeList(ParseEdgeList(buffer.str()), requested);
}

void WriteEdgeList(const BipartiteGraph& g, std::ostream& out) {
  out << "@mode bipartite\n";
  for (const auto& [u, v, w] : g.Edges()) {
    if (!ReadableId(g.id(u)) || !ReadableId(g.id(v))) {
      throw Error(ErrorCode::kDomainError,
                  "vertex id cannot be written to an edge list");
    }
    out << g.id(u) << ' ' << g.id(v) << ' ' << FormatWeight(w) << '\n';
  }
}

}  // namespace locdense
