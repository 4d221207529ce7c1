#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbing/diagonalize.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/laufer.hpp"

namespace plumbing {

/// First vertex (declaration order) with deficiency >= 2.
inline std::optional<std::string> find_very_bad(const PlumbingGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (deficiency(g, v) >= 2) return g.id(v);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// E8

/// Role labels of the E8 tree: center X, legs x1-x2-x3-x4, z1, y1-y2.
inline constexpr std::array<const char*, 8> kE8Roles = {"X", "x1", "x2", "x3", "x4", "z1", "y1", "y2"};

struct E8Witness {
  std::array<std::string, 8> ids;  // aligned with kE8Roles

  const std::string& role(std::string_view r) const {
    for (std::size_t i = 0; i < kE8Roles.size(); ++i)
      if (r == kE8Roles[i]) return ids[i];
    throw precondition_error("unknown E8 role '" + std::string(r) + "'");
  }
};

namespace detail {

/// All paths start, ... of `length` vertices of weight -2 leading away from `from`.
inline void minus_two_paths(const PlumbingGraph& g, std::size_t from, std::size_t start, std::size_t length,
                            std::vector<std::size_t>& path, std::vector<std::vector<std::size_t>>& out) {
  if (g.weight(start) != -2) return;
  path.push_back(start);
  if (path.size() == length) {
    out.push_back(path);
  } else {
    for (auto u : g.neighbors(start))
      if (u != from) minus_two_paths(g, start, u, length, path, out);
  }
  path.pop_back();
}

inline std::vector<std::vector<std::size_t>> minus_two_paths(const PlumbingGraph& g, std::size_t from,
                                                             std::size_t start, std::size_t length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  minus_two_paths(g, from, start, length, path, out);
  return out;
}

}  // namespace detail

/// An all-(-2) E8-shaped subtree with at least one edge of g leaving it. In a tree
/// every connected vertex set induces a subtree, so only the shape and the weights
/// need checking.
inline std::optional<E8Witness> find_proper_e8(const PlumbingGraph& g) {
  if (g.size() <= 8) return std::nullopt;
  for (std::size_t center = 0; center < g.size(); ++center) {
    if (g.weight(center) != -2 || g.valence(center) < 3) continue;
    const auto& nbrs = g.neighbors(center);
    for (auto a : nbrs) {
      for (auto b : nbrs) {
        for (auto c : nbrs) {
          if (a == b || b == c || a == c) continue;
          const auto xs = detail::minus_two_paths(g, center, a, 4);
          if (xs.empty()) continue;
          const auto zs = detail::minus_two_paths(g, center, b, 1);
          if (zs.empty()) continue;
          const auto ys = detail::minus_two_paths(g, center, c, 2);
          if (ys.empty()) continue;
          E8Witness w;
          w.ids = {g.id(center),    g.id(xs[0][0]), g.id(xs[0][1]), g.id(xs[0][2]),
                   g.id(xs[0][3]), g.id(zs[0][0]), g.id(ys[0][0]), g.id(ys[0][1])};
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Insulation

enum class InsulationViolation { has_very_bad, good_vertex_dK_positive, adjacent_bad_pair };

inline const char* to_string(InsulationViolation v) {
  switch (v) {
    case InsulationViolation::has_very_bad: return "has_very_bad";
    case InsulationViolation::good_vertex_dK_positive: return "good_vertex_dK_positive";
    case InsulationViolation::adjacent_bad_pair: return "adjacent_bad_pair";
  }
  return "?";
}

struct InsulationResult {
  bool insulated = true;
  std::optional<std::pair<std::string, InsulationViolation>> violation;
};

/// Number of neighbors with d >= 1 (bad in the inclusive sense).
inline std::size_t bad_neighbor_count(const PlumbingGraph& g, std::size_t v) {
  std::size_t k = 0;
  for (auto u : g.neighbors(v))
    if (deficiency(g, u) >= 1) ++k;
  return k;
}

/// Insulated: no very bad vertex, d(v) + K(v) <= 0 at every good v (K = number of
/// bad neighbors), and no two adjacent bad vertices. Reports the first offending
/// vertex in declaration order.
inline InsulationResult is_insulated(const PlumbingGraph& g) {
  const bool any_very_bad = find_very_bad(g).has_value();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto d = deficiency(g, v);
    if (d >= 2) return {false, std::make_pair(g.id(v), InsulationViolation::has_very_bad)};
    if (d <= 0) {
      const auto k_inclusive = bad_neighbor_count(g, v);
      if (!any_very_bad) {
        std::size_t k_exact = 0;
        for (auto u : g.neighbors(v))
          if (deficiency(g, u) == 1) ++k_exact;
        if (k_exact != k_inclusive) throw error("internal: bad-neighbor counts disagree without very bad vertices");
      }
      if (d + static_cast<std::int64_t>(k_inclusive) > 0)
        return {false, std::make_pair(g.id(v), InsulationViolation::good_vertex_dK_positive)};
    } else {
      for (auto u : g.neighbors(v))
        if (deficiency(g, u) >= 1) return {false, std::make_pair(g.id(v), InsulationViolation::adjacent_bad_pair)};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Report

enum class LauferStatus { lattice_L_space, not_lattice_L_space, skipped_not_ND };
enum class Prediction { LO_not_Lspace, notLO_Lspace, undetermined };

inline const char* to_string(LauferStatus s) {
  switch (s) {
    case LauferStatus::lattice_L_space: return "lattice_L_space";
    case LauferStatus::not_lattice_L_space: return "not_lattice_L_space";
    case LauferStatus::skipped_not_ND: return "skipped_not_ND";
  }
  return "?";
}
inline const char* to_string(Prediction p) {
  switch (p) {
    case Prediction::LO_not_Lspace: return "LO_not_Lspace";
    case Prediction::notLO_Lspace: return "notLO_Lspace";
    case Prediction::undetermined: return "undetermined";
  }
  return "?";
}

struct ClassificationReport {
  PlumbingGraph input;
  PlumbingGraph analyzed;  // minimal form of `input`
  bool minimal = true;     // of the input
  std::size_t blow_downs = 0;
  bool negative_definite = false;
  std::optional<std::string> very_bad_witness;
  std::optional<E8Witness> proper_e8_witness;
  bool insulated = false;
  std::optional<std::pair<std::string, InsulationViolation>> insulation_violation;
  LauferStatus laufer_verdict = LauferStatus::skipped_not_ND;
  std::optional<BigInt> laufer_chi;  // chi where the early-exit run stopped
  Prediction prediction = Prediction::undetermined;
};

/// Classifies the minimal form of g. Very bad vertex or proper E8 (on a
/// negative-definite graph) predicts left-orderable / not an L-space; insulation
/// predicts the opposite; anything else, and every non-negative-definite graph, is
/// undetermined.
inline ClassificationReport classify(const PlumbingGraph& g) {
  const bool minimal = is_minimal(g);
  const PlumbingGraph analyzed = minimal ? g : minimalize(g);
  ClassificationReport r{g, analyzed, minimal, 0, false, {}, {}, false, {}, LauferStatus::skipped_not_ND, {},
                         Prediction::undetermined};
  r.minimal = minimal;
  r.blow_downs = g.size() - analyzed.size();
  r.negative_definite = is_negative_definite(analyzed);
  r.very_bad_witness = find_very_bad(analyzed);
  r.proper_e8_witness = find_proper_e8(analyzed);
  const auto ins = is_insulated(analyzed);
  r.insulated = ins.insulated;
  r.insulation_violation = ins.violation;

  if (r.negative_definite) {
    const auto run = laufer_run(analyzed);
    r.laufer_verdict = run.verdict == Verdict::lattice_L_space ? LauferStatus::lattice_L_space
                                                               : LauferStatus::not_lattice_L_space;
    r.laufer_chi = run.chi_min;
    if (r.very_bad_witness || r.proper_e8_witness)
      r.prediction = Prediction::LO_not_Lspace;
    else if (r.insulated)
      r.prediction = Prediction::notLO_Lspace;
    if (r.insulated && r.laufer_verdict != LauferStatus::lattice_L_space)
      throw error("internal: insulated negative-definite graph failed Laufer's test");
  }
  return r;
}

}  // namespace plumbing
