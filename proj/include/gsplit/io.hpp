#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gsplit/graph.hpp"

namespace gsplit::io {

namespace detail {

// Splits a line into tokens separated by single spaces; rejects anything
// that is not a plain decimal number.
inline std::vector<long long> parse_numbers(const std::string& line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t j = i;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
    if (j == i || j - i > 12) {
      throw Error("line " + std::to_string(line_no) + ": expected a decimal number");
    }
    out.push_back(std::stoll(line.substr(i, j - i)));
    if (j == line.size()) break;
    if (line[j] != ' ' || j + 1 == line.size()) {
      throw Error("line " + std::to_string(line_no) + ": malformed separator");
    }
    i = j + 1;
  }
  return out;
}

// Yields the non-comment lines of a stream with their 1-based line numbers.
inline std::vector<std::pair<int, std::string>> data_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      throw Error("line " + std::to_string(line_no) + ": CRLF line ending");
    }
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(line_no, line);
  }
  return out;
}

}  // namespace detail

/// Reads the edge-list format: a header `n m` followed by exactly m lines
/// `u v` with u < v. Lines starting with '#' are ignored.
inline Graph read_graph(std::istream& in) {
  auto lines = detail::data_lines(in);
  if (lines.empty()) throw Error("missing header line `n m`");
  auto header = detail::parse_numbers(lines[0].second, lines[0].first);
  if (header.size() != 2) throw Error("header must be `n m`");
  const long long n = header[0], m = header[1];
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw Error("header declares " + std::to_string(m) + " edges, found " +
                std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [line_no, text] = lines[i];
    auto uv = detail::parse_numbers(text, line_no);
    if (uv.size() != 2) throw Error("line " + std::to_string(line_no) + ": expected `u v`");
    if (uv[0] >= uv[1] || uv[1] >= n) {
      throw Error("line " + std::to_string(line_no) + ": edge " + text +
                  " violates 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  Graph g(static_cast<int>(n), edges);
  if (g.m() != m) throw Error("duplicate edges in input");
  return g;
}

inline Graph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

/// Reads whitespace-separated vertex indices (used for K-side files).
inline VertexSet read_vertex_list(std::istream& in, int n) {
  std::vector<Vertex> out;
  for (auto& [line_no, text] : detail::data_lines(in)) {
    std::istringstream tokens(text);
    std::string tok;
    while (tokens >> tok) {
      auto nums = detail::parse_numbers(tok, line_no);
      if (nums.size() != 1 || nums[0] >= n) {
        throw Error("line " + std::to_string(line_no) + ": bad vertex " + tok);
      }
      out.push_back(static_cast<Vertex>(nums[0]));
    }
  }
  VertexSet set = make_vertex_set(out);
  if (set.size() != out.size()) throw Error("duplicate vertex in list");
  return set;
}

inline void write_vertex_list(std::ostream& out, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
}

}  // namespace gsplit::io
