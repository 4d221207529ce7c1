#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumbing/diagonalize.hpp"
#include "plumbing/graph.hpp"

namespace plumbing::gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random labelled tree: vertex i > 0 hangs off a uniformly chosen earlier vertex.
/// Ids are v0, v1, ...; weights uniform in [wmin, wmax].
inline PlumbingGraph random_tree(Rng& rng, std::size_t n, Weight wmin, Weight wmax) {
  std::vector<Vertex> vs;
  std::vector<PlumbingGraph::Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back({"v" + std::to_string(i), uniform(rng, wmin, wmax)});
    if (i) es.emplace_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1)), i);
  }
  // shuffle declaration order so index 0 is not always the first-attached vertex
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Vertex> shuffled(n);
  for (std::size_t i = 0; i < n; ++i) shuffled[perm[i]] = vs[i];
  for (auto& [a, b] : es) {
    a = perm[a];
    b = perm[b];
    if (a > b) std::swap(a, b);
  }
  return PlumbingGraph::build_indexed(std::move(shuffled), es);
}

/// Rejection-samples a negative-definite tree with 1..max_n vertices.
inline PlumbingGraph random_nd_tree(Rng& rng, std::size_t max_n, Weight wmin = -6, Weight wmax = -1) {
  for (;;) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_n)));
    auto g = random_tree(rng, n, wmin, wmax);
    if (is_negative_definite(g)) return g;
  }
}

inline PlumbingGraph random_nd_minimal_tree(Rng& rng, std::size_t max_n, Weight wmin = -6, Weight wmax = -2) {
  for (;;) {
    auto g = random_nd_tree(rng, max_n, wmin, wmax);
    if (is_minimal(g)) return g;
  }
}

/// The E8 tree with the usual ids.
inline PlumbingGraph e8() {
  return PlumbingGraph::build({{"X", -2}, {"x1", -2}, {"x2", -2}, {"x3", -2}, {"x4", -2}, {"z1", -2}, {"y1", -2},
                               {"y2", -2}},
                              {{"X", "x1"}, {"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"X", "z1"}, {"X", "y1"},
                               {"y1", "y2"}});
}

/// E8 plus one vertex w of the given weight adjacent to `at`.
inline PlumbingGraph e8_plus(const std::string& at, Weight w) {
  const auto base = e8();
  auto vs = base.vertices();
  vs.push_back({"w", w});
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [a, b] : base.edges()) es.emplace_back(base.id(a), base.id(b));
  es.emplace_back(at, "w");
  return PlumbingGraph::build(std::move(vs), es);
}

/// E8 with a random tree of 1..extra vertices hanging off `at`; rejection-sampled until ND.
inline PlumbingGraph e8_with_random_tail(Rng& rng, const std::string& at, std::size_t extra) {
  const auto base = e8();
  for (int attempt = 0;; ++attempt) {
    if (attempt == 100000) throw std::runtime_error("no negative-definite tail found at " + at);
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(extra)));
    const auto tail = random_tree(rng, n, -12, -1);
    auto vs = base.vertices();
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : base.edges()) es.emplace_back(base.id(a), base.id(b));
    for (const auto& v : tail.vertices()) vs.push_back({"t" + v.id, v.weight});
    for (const auto& [a, b] : tail.edges()) es.emplace_back("t" + tail.id(a), "t" + tail.id(b));
    es.emplace_back(at, "t" + tail.id(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))));
    auto g = PlumbingGraph::build(std::move(vs), es);
    if (is_negative_definite(g)) return g;
  }
}

}  // namespace plumbing::gen
