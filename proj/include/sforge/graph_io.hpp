// Copyright 2026 The Authors.
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

#ifndef SFORGE_GRAPH_IO_HPP_
#define SFORGE_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "sforge/graph.hpp"

namespace sforge {

/// Largest vertex count representable in graph6 (the 8-byte size form).
inline constexpr long long kMaxGraph6Vertices = 68719476735LL;

/// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
/// newline are accepted. Throws ParseError naming the offending byte.
Graph parse_graph6(std::string_view text);

/// Encodes `g` in graph6 using the shortest size form.
std::string write_graph6(const Graph& g);

/// Parses a plain edge list: one "u v" pair per line, with an optional first
/// line "n = <count>". Blank lines and lines starting with '#' are skipped.
/// Without a declared count the graph has max index + 1 vertices.
/// Throws ParseError on bad tokens, self-loops and duplicate edges.
Graph parse_edgelist(std::string_view text);

/// Inverse of parse_edgelist; always writes the "n = " line.
std::string write_edgelist(const Graph& g);

}  // namespace sforge

#endif  // SFORGE_GRAPH_IO_HPP_
