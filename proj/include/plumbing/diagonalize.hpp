#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbing/determinant.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/hj_fraction.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

/// Diagonal of the congruent diagonal matrix produced by eliminating a rooted tree
/// from the leaves inward. `entries` is indexed like the graph's vertices.
struct DiagonalForm {
  std::string root;
  std::vector<std::string> ids;
  std::vector<Rational> entries;
  std::vector<std::string> elimination_order;  // leaves first, root last

  const Rational& entry(std::string_view id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return entries[i];
    throw precondition_error("unknown vertex '" + std::string(id) + "'");
  }
  /// Delta at the root.
  const Rational& root_entry() const { return entry(root); }

  Rational product() const {
    Rational p(1);
    for (const auto& e : entries) p *= e;
    return p;
  }
};

namespace detail {

/// Parent (or size() for the root) and depth of every vertex in the tree rooted at `root`.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> root_tree(const PlumbingGraph& g,
                                                                               std::size_t root) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n, n), depth(n, 0), queue{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (auto u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      parent[u] = v;
      depth[u] = depth[v] + 1;
      queue.push_back(u);
    }
  }
  return {std::move(parent), std::move(depth)};
}

}  // namespace detail

/// Eliminates vertices deepest-first (ties in declaration order); each eliminated
/// entry e adds -1/e to its parent. Throws degenerate_form if a non-root entry is 0
/// when it is eliminated. A zero at the root is returned as is.
inline DiagonalForm rooted_diagonalize(const PlumbingGraph& g, PlumbingGraph::Index root) {
  const std::size_t n = g.size();
  if (root >= n) throw precondition_error("root index out of range");
  auto [parent, depth] = detail::root_tree(g, root);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depth[a] > depth[b]; });

  DiagonalForm form;
  form.root = g.id(root);
  form.ids.reserve(n);
  form.entries.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    form.ids.push_back(g.id(v));
    form.entries.emplace_back(static_cast<long long>(g.weight(v)));
  }
  for (auto v : order) {
    form.elimination_order.push_back(g.id(v));
    if (v == root) continue;
    if (form.entries[v].is_zero())
      throw degenerate_form(g.id(v), "zero pivot at vertex '" + g.id(v) + "' while diagonalizing toward '" +
                                         g.id(root) + "'");
    form.entries[parent[v]] -= form.entries[v].reciprocal();
  }
  return form;
}

inline DiagonalForm rooted_diagonalize(const PlumbingGraph& g, std::string_view root) {
  return rooted_diagonalize(g, g.index_of(root));
}

/// By congruence: negative-definite iff every pivot of some rooted elimination is < 0.
inline bool is_negative_definite(const PlumbingGraph& g, PlumbingGraph::Index root = 0) {
  try {
    const auto form = rooted_diagonalize(g, root);
    return std::all_of(form.entries.begin(), form.entries.end(), [](const Rational& e) { return e.sign() < 0; });
  } catch (const degenerate_form&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Splitting and surgery

/// A tree with a distinguished boundary vertex.
struct MarkedGraph {
  PlumbingGraph graph;
  std::string mark;

  MarkedGraph(PlumbingGraph g, std::string m) : graph(std::move(g)), mark(std::move(m)) {
    if (!graph.contains(mark)) throw precondition_error("mark '" + mark + "' is not a vertex of the graph");
  }
};

/// Cuts the edge v-w; returns the side containing v (marked v) and the side containing w (marked w).
inline std::pair<MarkedGraph, MarkedGraph> split(const PlumbingGraph& g, std::string_view v, std::string_view w) {
  const auto iv = g.index_of(v);
  const auto iw = g.index_of(w);
  if (!g.adjacent(iv, iw))
    throw precondition_error("no edge '" + std::string(v) + "'-'" + std::string(w) + "' to split along");
  std::vector<bool> on_v_side(g.size(), false);
  std::vector<std::size_t> stack{iv};
  on_v_side[iv] = true;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto u : g.neighbors(x)) {
      if (on_v_side[u] || (x == iv && u == iw)) continue;
      on_v_side[u] = true;
      stack.push_back(u);
    }
  }
  std::vector<std::size_t> side_v, side_w;
  for (std::size_t i = 0; i < g.size(); ++i) (on_v_side[i] ? side_v : side_w).push_back(i);
  return {MarkedGraph(induced_subgraph(g, side_v), std::string(v)),
          MarkedGraph(induced_subgraph(g, side_w), std::string(w))};
}

/// 1/Delta at the mark, where Delta is the mark's entry in rooted_diagonalize.
inline Rational derationalizer(const MarkedGraph& mg) {
  if (!is_negative_definite(mg.graph))
    throw not_negative_definite("de-rationaliser needs a negative-definite marked graph");
  const auto form = rooted_diagonalize(mg.graph, mg.mark);
  const Rational& delta = form.root_entry();
  if (delta.is_zero()) throw error("internal: zero root entry on a negative-definite graph");
  return delta.reciprocal();
}

/// Attaches at the mark a linear chain whose weights are hj_expand(r), first chain
/// vertex adjacent to the mark. New ids are `<mark>_s1, <mark>_s2, ...`
/// (`<mark>_s2_1, ...` and so on if those are taken). The result is not minimalized.
inline PlumbingGraph surger(const MarkedGraph& mg, const Rational& r) {
  if (r.is_zero()) throw precondition_error("0-surgery does not yield a plumbing tree");
  const auto expansion = hj_expand(r);
  const auto& g = mg.graph;
  const std::size_t k = expansion.size();

  auto make_id = [&](std::size_t generation, std::size_t i) {
    return generation == 1 ? mg.mark + "_s" + std::to_string(i)
                           : mg.mark + "_s" + std::to_string(generation) + "_" + std::to_string(i);
  };
  std::size_t generation = 1;
  for (;; ++generation) {
    bool clash = false;
    for (std::size_t i = 1; i <= k && !clash; ++i) clash = g.contains(make_id(generation, i));
    if (!clash) break;
  }

  std::vector<Vertex> vertices = g.vertices();
  std::vector<PlumbingGraph::Edge> edges = g.edges();
  std::size_t prev = g.index_of(mg.mark);
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt& a = expansion.entries()[i];
    if (a > BigInt(std::numeric_limits<Weight>::max()) || a < BigInt(std::numeric_limits<Weight>::min()))
      throw precondition_error("surgery chain weight " + a.str() + " does not fit a vertex weight");
    vertices.push_back({make_id(generation, i + 1), static_cast<Weight>(a)});
    edges.emplace_back(prev, vertices.size() - 1);
    prev = vertices.size() - 1;
  }
  return PlumbingGraph::build_indexed(std::move(vertices), edges);
}

}  // namespace plumbing
