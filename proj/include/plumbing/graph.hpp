#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plumbing/errors.hpp"

namespace plumbing {

using Weight = std::int64_t;

enum class GraphErrorKind {
  syntax,
  duplicate_vertex,
  unknown_vertex,
  self_loop,
  duplicate_edge,
  disconnected,
  cycle,
  empty_graph,
};

inline const char* to_string(GraphErrorKind k) {
  switch (k) {
    case GraphErrorKind::syntax: return "syntax";
    case GraphErrorKind::duplicate_vertex: return "duplicate_vertex";
    case GraphErrorKind::unknown_vertex: return "unknown_vertex";
    case GraphErrorKind::self_loop: return "self_loop";
    case GraphErrorKind::duplicate_edge: return "duplicate_edge";
    case GraphErrorKind::disconnected: return "disconnected";
    case GraphErrorKind::cycle: return "cycle";
    case GraphErrorKind::empty_graph: return "empty_graph";
  }
  return "unknown";
}

/// A structural problem with a would-be plumbing tree.
class graph_error : public error {
 public:
  graph_error(GraphErrorKind kind, const std::string& what) : error(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

struct Vertex {
  std::string id;
  Weight weight = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Weighted plumbing tree. Immutable once built; vertex order is declaration order
/// and fixes the row order of every matrix computed from the graph.
class PlumbingGraph {
 public:
  using Index = std::size_t;
  using Edge = std::pair<Index, Index>;  // first < second

  /// Validates and builds. Edges are given by vertex id.
  static PlumbingGraph build(std::vector<Vertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
    PlumbingGraph g;
    g.vertices_ = std::move(vertices);
    if (g.vertices_.empty()) throw graph_error(GraphErrorKind::empty_graph, "graph has no vertices");
    for (Index i = 0; i < g.vertices_.size(); ++i) {
      if (!g.index_.emplace(g.vertices_[i].id, i).second)
        throw graph_error(GraphErrorKind::duplicate_vertex, "duplicate vertex id '" + g.vertices_[i].id + "'");
    }
    std::vector<Edge> by_index;
    by_index.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      const auto ia = g.find(a);
      const auto ib = g.find(b);
      if (!ia) throw graph_error(GraphErrorKind::unknown_vertex, "edge references unknown vertex '" + a + "'");
      if (!ib) throw graph_error(GraphErrorKind::unknown_vertex, "edge references unknown vertex '" + b + "'");
      by_index.emplace_back(*ia, *ib);
    }
    g.set_edges(by_index);
    return g;
  }

  /// Same as build() but with edges given by index.
  static PlumbingGraph build_indexed(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
    PlumbingGraph g;
    g.vertices_ = std::move(vertices);
    if (g.vertices_.empty()) throw graph_error(GraphErrorKind::empty_graph, "graph has no vertices");
    for (Index i = 0; i < g.vertices_.size(); ++i) {
      if (!g.index_.emplace(g.vertices_[i].id, i).second)
        throw graph_error(GraphErrorKind::duplicate_vertex, "duplicate vertex id '" + g.vertices_[i].id + "'");
    }
    for (const auto& [a, b] : edges) {
      if (a >= g.vertices_.size() || b >= g.vertices_.size())
        throw graph_error(GraphErrorKind::unknown_vertex, "edge index out of range");
    }
    g.set_edges(edges);
    return g;
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(Index i) const { return vertices_.at(i); }
  const std::string& id(Index i) const { return vertices_.at(i).id; }
  Weight weight(Index i) const { return vertices_.at(i).weight; }
  const std::vector<Index>& neighbors(Index i) const { return adjacency_.at(i); }
  std::size_t valence(Index i) const { return adjacency_.at(i).size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<Index> find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Index index_of(std::string_view id) const {
    const auto i = find(id);
    if (!i) throw precondition_error("unknown vertex '" + std::string(id) + "'");
    return *i;
  }
  bool contains(std::string_view id) const { return find(id).has_value(); }

  bool adjacent(Index a, Index b) const {
    const auto& n = adjacency_.at(a);
    return std::binary_search(n.begin(), n.end(), b);
  }

  /// Same vertex list (in order) and same edge set.
  friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  PlumbingGraph() = default;

  void set_edges(const std::vector<Edge>& edges) {
    const std::size_t n = vertices_.size();
    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), Index{0});
    auto root = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    adjacency_.assign(n, {});
    for (auto [a, b] : edges) {
      if (a == b) throw graph_error(GraphErrorKind::self_loop, "self-loop at vertex '" + vertices_[a].id + "'");
      if (a > b) std::swap(a, b);
      if (std::find(adjacency_[a].begin(), adjacency_[a].end(), b) != adjacency_[a].end())
        throw graph_error(GraphErrorKind::duplicate_edge,
                          "duplicate edge '" + vertices_[a].id + "'-'" + vertices_[b].id + "'");
      const Index ra = root(a);
      const Index rb = root(b);
      if (ra == rb)
        throw graph_error(GraphErrorKind::cycle,
                          "edge '" + vertices_[a].id + "'-'" + vertices_[b].id + "' closes a cycle");
      parent[ra] = rb;
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
      edges_.emplace_back(a, b);
    }
    if (edges_.size() + 1 != n)
      throw graph_error(GraphErrorKind::disconnected, "graph is disconnected (" + std::to_string(n) + " vertices, " +
                                                          std::to_string(edges_.size()) + " edges)");
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(edges_.begin(), edges_.end());
  }

  std::vector<Vertex> vertices_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::vector<Index>> adjacency_;
  std::vector<Edge> edges_;
};

/// Subtree induced on `keep` (any order; result keeps declaration order).
/// Throws graph_error(disconnected) if the selection is not connected.
inline PlumbingGraph induced_subgraph(const PlumbingGraph& g, std::vector<PlumbingGraph::Index> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<PlumbingGraph::Index> new_index(g.size(), g.size());
  std::vector<Vertex> vertices;
  for (auto v : keep) {
    new_index.at(v) = vertices.size();
    vertices.push_back(g.vertex(v));
  }
  std::vector<PlumbingGraph::Edge> edges;
  for (const auto& [a, b] : g.edges())
    if (new_index[a] != g.size() && new_index[b] != g.size()) edges.emplace_back(new_index[a], new_index[b]);
  return PlumbingGraph::build_indexed(std::move(vertices), edges);
}

// ---------------------------------------------------------------------------
// Vertex classification

enum class Shape { isolated, leaf, bamboo, node };
enum class Quality { good, bad, very_bad };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::isolated: return "isolated";
    case Shape::leaf: return "leaf";
    case Shape::bamboo: return "bamboo";
    case Shape::node: return "node";
  }
  return "?";
}

inline const char* to_string(Quality q) {
  switch (q) {
    case Quality::good: return "good";
    case Quality::bad: return "bad";
    case Quality::very_bad: return "very-bad";
  }
  return "?";
}

/// Deficiency d(v) = n(v) - |w(v)|.
inline std::int64_t deficiency(const PlumbingGraph& g, PlumbingGraph::Index v) {
  const Weight w = g.weight(v);
  return static_cast<std::int64_t>(g.valence(v)) - (w < 0 ? -w : w);
}

/// `quality` is the disjoint refinement (bad means d = 1 exactly); the
/// predicates below follow the inclusive reading where very bad vertices are bad too.
struct VertexProfile {
  std::string id;
  Weight weight = 0;
  std::size_t valence = 0;
  std::int64_t deficiency = 0;
  Shape shape = Shape::isolated;
  Quality quality = Quality::good;

  bool is_good() const noexcept { return deficiency <= 0; }
  bool is_bad() const noexcept { return deficiency >= 1; }
  bool is_very_bad() const noexcept { return deficiency >= 2; }
};

inline VertexProfile vertex_profile(const PlumbingGraph& g, PlumbingGraph::Index v) {
  VertexProfile p;
  p.id = g.id(v);
  p.weight = g.weight(v);
  p.valence = g.valence(v);
  p.deficiency = deficiency(g, v);
  p.shape = p.valence == 0 ? Shape::isolated : p.valence == 1 ? Shape::leaf : p.valence == 2 ? Shape::bamboo : Shape::node;
  p.quality = p.deficiency <= 0 ? Quality::good : p.deficiency == 1 ? Quality::bad : Quality::very_bad;
  return p;
}

inline VertexProfile vertex_profile(const PlumbingGraph& g, std::string_view id) {
  return vertex_profile(g, g.index_of(id));
}

// ---------------------------------------------------------------------------
// Intersection form

/// Symmetric integer matrix: weights on the diagonal, 1 on edges, 0 elsewhere.
class IntersectionMatrix {
 public:
  explicit IntersectionMatrix(const PlumbingGraph& g) : n_(g.size()), data_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) data_[i * n_ + i] = g.weight(i);
    for (const auto& [a, b] : g.edges()) {
      data_[a * n_ + b] = 1;
      data_[b * n_ + a] = 1;
    }
  }

  std::size_t dimension() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_.at(i * n_ + j); }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(n_, std::vector<std::int64_t>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

inline IntersectionMatrix intersection_matrix(const PlumbingGraph& g) { return IntersectionMatrix(g); }

// ---------------------------------------------------------------------------
// Minimal form

/// No vertex of valence one or two carries weight -1.
inline bool is_minimal(const PlumbingGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto n = g.valence(v);
    if (g.weight(v) == -1 && (n == 1 || n == 2)) return false;
  }
  return true;
}

/// Blows down a +-1 vertex of valence 1 or 2: the vertex disappears, each neighbor's
/// weight moves by -weight(v), and two former neighbors become adjacent.
inline PlumbingGraph blow_down_once(const PlumbingGraph& g, PlumbingGraph::Index v) {
  const Weight eps = g.weight(v);
  if (eps != -1 && eps != 1)
    throw precondition_error("cannot blow down '" + g.id(v) + "': weight " + std::to_string(eps) + " is not +-1");
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) throw precondition_error("cannot blow down isolated vertex '" + g.id(v) + "'");
  if (nbrs.size() > 2)
    throw precondition_error("cannot blow down '" + g.id(v) + "': valence " + std::to_string(nbrs.size()) + " > 2");

  std::vector<PlumbingGraph::Index> new_index(g.size(), 0);
  std::vector<Vertex> vertices;
  vertices.reserve(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == v) continue;
    new_index[i] = vertices.size();
    Vertex x = g.vertex(i);
    if (g.adjacent(i, v)) x.weight -= eps;
    vertices.push_back(std::move(x));
  }
  std::vector<PlumbingGraph::Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    edges.emplace_back(new_index[a], new_index[b]);
  }
  if (nbrs.size() == 2) {
    // The two neighbors lie in different components of g - v.
    if (g.adjacent(nbrs[0], nbrs[1])) throw error("internal: blow-down would create a multi-edge");
    edges.emplace_back(new_index[nbrs[0]], new_index[nbrs[1]]);
  }
  return PlumbingGraph::build_indexed(std::move(vertices), edges);
}

inline PlumbingGraph blow_down_once(const PlumbingGraph& g, std::string_view id) {
  return blow_down_once(g, g.index_of(id));
}

/// Number of -1 vertices of valence one or two.
inline std::size_t count_minimality_offenders(const PlumbingGraph& g) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto n = g.valence(v);
    if (g.weight(v) == -1 && (n == 1 || n == 2)) ++count;
  }
  return count;
}

/// Blows down -1 vertices of valence one or two (first in declaration order each
/// round) until the graph is minimal.
inline PlumbingGraph minimalize(const PlumbingGraph& g) {
  PlumbingGraph current = g;
  for (;;) {
    std::optional<PlumbingGraph::Index> target;
    for (std::size_t v = 0; v < current.size() && !target; ++v) {
      const auto n = current.valence(v);
      if (current.weight(v) == -1 && (n == 1 || n == 2)) target = v;
    }
    if (!target) return current;
    // Each move keeps at least one vertex, so this never produces an empty graph.
    current = blow_down_once(current, *target);
  }
}

}  // namespace plumbing
