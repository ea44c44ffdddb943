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

#include "sforge/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "sforge/error.hpp"

namespace sforge {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("character out of graph6 range", pos);
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    pos = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (pos >= text.size()) throw ParseError("missing graph6 size field", pos);

  // Size field: one byte, or 126 + 3 bytes, or 126 126 + 6 bytes.
  long long n = 0;
  int size_bytes = 0;
  if (text[pos] != 126) {
    n = sextet(text, pos);
    ++pos;
  } else if (pos + 1 < text.size() && text[pos + 1] == 126) {
    pos += 2;
    size_bytes = 6;
  } else {
    pos += 1;
    size_bytes = 3;
  }
  if (size_bytes > 0) {
    if (pos + size_bytes > text.size()) {
      throw ParseError("truncated graph6 size field", text.size());
    }
    for (int i = 0; i < size_bytes; ++i) n = (n << 6) | sextet(text, pos++);
  }
  if (n > std::numeric_limits<int>::max()) {
    throw ParseError("graph6 vertex count too large for this build", pos);
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < data_bytes) {
    throw ParseError("truncated graph6 adjacency field", text.size());
  }
  if (text.size() - pos > data_bytes) {
    throw ParseError("trailing bytes after graph6 adjacency field",
                     pos + data_bytes);
  }

  std::vector<Edge> edges;
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      const int bit = 5 - static_cast<int>(k % 6);
      if ((sextet(text, byte) >> bit) & 1) edges.push_back({u, v});
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const std::size_t last = pos + data_bytes - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((sextet(text, last) & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero graph6 padding bits", last);
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const long long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    if (n > kMaxGraph6Vertices) throw DomainError("graph too large for graph6");
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }

  const long long bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> packed(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const Edge& e : g.edges()) {
    // Column-major upper triangle: bit index of (u, v) with u < v.
    const long long k = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
    packed[static_cast<std::size_t>(k / 6)] |=
        static_cast<std::uint8_t>(1 << (5 - k % 6));
  }
  for (std::uint8_t s : packed) out.push_back(static_cast<char>(s + 63));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  long long declared_n = -1;
  long long max_index = -1;
  bool first_content_line = true;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    // Tokenize on blanks.
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                 line[i] == '\r')) {
        ++i;
      }
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r') {
        ++i;
      }
      if (i > begin) tokens.emplace_back(line.substr(begin, i - begin), offset + begin);
    }
    if (tokens.empty() || tokens.front().first.front() == '#') continue;

    if (first_content_line && tokens.front().first == "n") {
      first_content_line = false;
      if (tokens.size() != 3 || tokens[1].first != "=") {
        throw ParseError("expected 'n = <count>'", tokens.front().second);
      }
      const auto [tok, at] = tokens[2];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), declared_n);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || declared_n < 0) {
        throw ParseError("invalid vertex count '" + std::string(tok) + "'", at);
      }
      continue;
    }
    first_content_line = false;

    if (tokens.size() != 2) {
      throw ParseError("expected two vertex indices per line", tokens.front().second);
    }
    long long ends[2];
    for (int t = 0; t < 2; ++t) {
      const auto [tok, at] = tokens[t];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ends[t]);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || ends[t] < 0 ||
          ends[t] > std::numeric_limits<int>::max() - 1) {
        throw ParseError("invalid vertex index '" + std::string(tok) + "'", at);
      }
    }
    if (ends[0] == ends[1]) {
      throw ParseError("self-loop at vertex " + std::to_string(ends[0]),
                       tokens[0].second);
    }
    const std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(ends[0], ends[1])),
                                        static_cast<Vertex>(std::max(ends[0], ends[1]))};
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge " + std::to_string(key.first) + " " +
                           std::to_string(key.second),
                       tokens[0].second);
    }
    edges.push_back({key.first, key.second});
    max_index = std::max({max_index, ends[0], ends[1]});
  }

  long long n = max_index + 1;
  if (declared_n >= 0) {
    if (declared_n < n) {
      throw ParseError("vertex index exceeds declared count", 0);
    }
    n = declared_n;
  }
  if (n > std::numeric_limits<int>::max()) throw ParseError("too many vertices", 0);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n = " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace sforge
