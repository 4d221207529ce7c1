#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plumbing/graph.hpp"

namespace plumbing {

/// graph_error with a 1-based source position (column of the offending token).
class parse_error : public graph_error {
 public:
  parse_error(GraphErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : graph_error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline bool valid_id(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace detail

inline bool is_valid_vertex_id(std::string_view s) { return detail::valid_id(s); }

/// Parses the line-oriented graph format:
///
///     # comment
///     vertex <id> <weight>
///     edge <id> <id>
///
/// Edges may appear before the vertices they name.
inline PlumbingGraph parse_graph(std::string_view text) {
  struct PendingEdge {
    std::string a, b;
    std::size_t line, col_a, col_b;
  };
  std::vector<Vertex> vertices;
  std::vector<std::size_t> vertex_lines;
  std::vector<PendingEdge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    const auto& head = tokens[0];
    if (head.text == "vertex") {
      if (tokens.size() != 3)
        throw parse_error(GraphErrorKind::syntax, line_no, head.column, "expected 'vertex <id> <weight>'");
      if (!detail::valid_id(tokens[1].text))
        throw parse_error(GraphErrorKind::syntax, line_no, tokens[1].column,
                          "invalid vertex id '" + std::string(tokens[1].text) + "'");
      std::string_view w = tokens[2].text;
      if (w.size() > 1 && w.front() == '+' && w[1] != '-') w.remove_prefix(1);
      Weight weight = 0;
      const auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc() || end != w.data() + w.size())
        throw parse_error(GraphErrorKind::syntax, line_no, tokens[2].column,
                          "invalid weight '" + std::string(tokens[2].text) + "'");
      const std::string id(tokens[1].text);
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].id == id)
          throw parse_error(GraphErrorKind::duplicate_vertex, line_no, tokens[1].column,
                            "duplicate vertex id '" + id + "' (first declared on line " +
                                std::to_string(vertex_lines[i]) + ")");
      }
      vertices.push_back({id, weight});
      vertex_lines.push_back(line_no);
    } else if (head.text == "edge") {
      if (tokens.size() != 3)
        throw parse_error(GraphErrorKind::syntax, line_no, head.column, "expected 'edge <id> <id>'");
      for (int k = 1; k <= 2; ++k) {
        if (!detail::valid_id(tokens[k].text))
          throw parse_error(GraphErrorKind::syntax, line_no, tokens[k].column,
                            "invalid vertex id '" + std::string(tokens[k].text) + "'");
      }
      edges.push_back({std::string(tokens[1].text), std::string(tokens[2].text), line_no, tokens[1].column,
                       tokens[2].column});
    } else {
      throw parse_error(GraphErrorKind::syntax, line_no, head.column,
                        "unknown directive '" + std::string(head.text) + "'");
    }
  }

  if (vertices.empty()) throw parse_error(GraphErrorKind::empty_graph, line_no, 1, "no vertices declared");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].id, i);
  std::vector<std::size_t> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::string, std::string>> edge_ids;
  edge_ids.reserve(edges.size());
  for (const auto& e : edges) {
    const auto ia = index.find(e.a);
    if (ia == index.end())
      throw parse_error(GraphErrorKind::unknown_vertex, e.line, e.col_a, "unknown vertex id '" + e.a + "'");
    const auto ib = index.find(e.b);
    if (ib == index.end())
      throw parse_error(GraphErrorKind::unknown_vertex, e.line, e.col_b, "unknown vertex id '" + e.b + "'");
    if (ia->second == ib->second)
      throw parse_error(GraphErrorKind::self_loop, e.line, e.col_a, "self-loop at vertex '" + e.a + "'");
    const std::pair<std::size_t, std::size_t> key = std::minmax(ia->second, ib->second);
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw parse_error(GraphErrorKind::duplicate_edge, e.line, e.col_a,
                        "duplicate edge '" + e.a + "'-'" + e.b + "'");
    seen.push_back(key);
    const auto ra = root(ia->second);
    const auto rb = root(ib->second);
    if (ra == rb)
      throw parse_error(GraphErrorKind::cycle, e.line, e.col_a,
                        "edge '" + e.a + "'-'" + e.b + "' closes a cycle");
    parent[ra] = rb;
    edge_ids.emplace_back(e.a, e.b);
  }
  try {
    return PlumbingGraph::build(std::move(vertices), edge_ids);
  } catch (const graph_error& err) {
    // Only connectivity can fail at this point.
    throw parse_error(err.kind(), line_no, 1, err.what());
  }
}

inline PlumbingGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

/// Canonical text: vertices in declaration order, then edges with each pair
/// ordered by id and the list sorted lexicographically.
inline std::string serialize(const PlumbingGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) out += "vertex " + v.id + " " + std::to_string(v.weight) + "\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : g.edges()) {
    auto x = g.id(a);
    auto y = g.id(b);
    if (y < x) std::swap(x, y);
    edges.emplace_back(std::move(x), std::move(y));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out += "edge " + a + " " + b + "\n";
  return out;
}

}  // namespace plumbing
