#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumbing/classify.hpp"
#include "plumbing/graph.hpp"

namespace plumbing {

inline constexpr std::size_t kDefaultEnumerationCap = 9;

namespace detail {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Vertices minimizing the largest component left after their removal (1 or 2 of them).
inline std::vector<std::size_t> centroids(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> parent(n, n), order{0}, sub(n, 1);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (auto u : adj[order[h]])
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = order[h];
        order.push_back(u);
      }
  for (std::size_t i = order.size(); i-- > 1;) sub[parent[order[i]]] += sub[order[i]];
  std::size_t best = n + 1;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t worst = n - sub[v];
    for (auto u : adj[v])
      if (u != parent[v]) worst = std::max(worst, sub[u]);
    if (worst < best) {
      best = worst;
      out = {v};
    } else if (worst == best) {
      out.push_back(v);
    }
  }
  return out;
}

/// AHU code of the subtree at v: "(" weight children-codes-sorted ")".
inline std::string rooted_code(const Adjacency& adj, const std::vector<Weight>& w, std::size_t v, std::size_t from) {
  std::vector<std::string> kids;
  for (auto u : adj[v])
    if (u != from) kids.push_back(rooted_code(adj, w, u, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + std::to_string(w[v]);
  for (const auto& k : kids) out += k;
  return out + ")";
}

inline std::string canonical_code(const Adjacency& adj, const std::vector<Weight>& w) {
  std::string best;
  for (auto c : centroids(adj)) {
    auto code = rooted_code(adj, w, c, adj.size());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline Adjacency adjacency_of(const PlumbingGraph& g) {
  Adjacency adj(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

}  // namespace detail

/// Isomorphism-invariant encoding of a weighted tree (ids are ignored).
inline std::string canonical_encoding(const PlumbingGraph& g) {
  std::vector<Weight> w(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) w[v] = g.weight(v);
  return detail::canonical_code(detail::adjacency_of(g), w);
}

/// Rebuilds the graph described by a canonical encoding; ids are v0, v1, ... in preorder.
inline PlumbingGraph graph_from_encoding(std::string_view code) {
  std::vector<Vertex> vertices;
  std::vector<PlumbingGraph::Edge> edges;
  std::vector<std::size_t> stack;
  std::size_t i = 0;
  while (i < code.size()) {
    if (code[i] == '(') {
      ++i;
      std::size_t j = i;
      if (j < code.size() && code[j] == '-') ++j;
      while (j < code.size() && code[j] >= '0' && code[j] <= '9') ++j;
      if (j == i) throw precondition_error("malformed tree encoding");
      const Weight w = std::stoll(std::string(code.substr(i, j - i)));
      const std::size_t id = vertices.size();
      vertices.push_back({"v" + std::to_string(id), w});
      if (!stack.empty()) edges.emplace_back(stack.back(), id);
      stack.push_back(id);
      i = j;
    } else if (code[i] == ')') {
      if (stack.empty()) throw precondition_error("malformed tree encoding");
      stack.pop_back();
      ++i;
    } else {
      throw precondition_error("malformed tree encoding");
    }
  }
  if (!stack.empty()) throw precondition_error("malformed tree encoding");
  return PlumbingGraph::build_indexed(std::move(vertices), edges);
}

/// All unlabeled trees on n vertices, as adjacency lists.
inline std::vector<detail::Adjacency> unlabeled_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<detail::Adjacency> level{detail::Adjacency(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<detail::Adjacency> next;
    for (const auto& t : level) {
      for (std::size_t v = 0; v < t.size(); ++v) {
        auto grown = t;
        grown.emplace_back();
        grown[v].push_back(size - 1);
        grown[size - 1].push_back(v);
        if (seen.insert(detail::canonical_code(grown, std::vector<Weight>(size, 0))).second)
          next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Canonical encodings of all weighted trees with 1..max_vertices vertices and
/// weights in [weight_min, weight_max], one per isomorphism class, sorted.
inline std::set<std::string> weighted_tree_encodings(std::size_t max_vertices, Weight weight_min,
                                                     Weight weight_max) {
  if (weight_min > weight_max) throw precondition_error("empty weight range");
  std::set<std::string> codes;
  const auto span = static_cast<std::size_t>(weight_max - weight_min + 1);
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (const auto& tree : unlabeled_trees(n)) {
      std::vector<std::size_t> digit(n, 0);
      std::vector<Weight> w(n, weight_min);
      for (;;) {
        codes.insert(detail::canonical_code(tree, w));
        std::size_t i = 0;
        while (i < n && digit[i] + 1 == span) {
          digit[i] = 0;
          w[i] = weight_min;
          ++i;
        }
        if (i == n) break;
        ++digit[i];
        ++w[i];
      }
    }
  }
  return codes;
}

/// Negative-definite minimal trees up to isomorphism, in canonical-encoding order.
inline std::vector<PlumbingGraph> enumerate_nd_minimal_trees(std::size_t max_vertices, Weight weight_min,
                                                             Weight weight_max,
                                                             std::size_t cap = kDefaultEnumerationCap) {
  if (max_vertices > cap)
    throw precondition_error("max_vertices " + std::to_string(max_vertices) + " exceeds the enumeration cap " +
                             std::to_string(cap));
  std::vector<PlumbingGraph> out;
  for (const auto& code : weighted_tree_encodings(max_vertices, weight_min, weight_max)) {
    auto g = graph_from_encoding(code);
    if (is_minimal(g) && is_negative_definite(g)) out.push_back(std::move(g));
  }
  return out;
}

struct EnumeratedGraph {
  std::string encoding;
  PlumbingGraph graph;
  ClassificationReport report;
};

/// Classifies every negative-definite minimal tree in the range, in canonical order.
inline void enumerate_and_classify(std::size_t max_vertices, Weight weight_min, Weight weight_max,
                                   const std::function<void(const EnumeratedGraph&)>& visit,
                                   std::size_t cap = kDefaultEnumerationCap) {
  for (auto& g : enumerate_nd_minimal_trees(max_vertices, weight_min, weight_max, cap)) {
    auto report = classify(g);
    visit(EnumeratedGraph{canonical_encoding(g), std::move(g), std::move(report)});
  }
}

}  // namespace plumbing
