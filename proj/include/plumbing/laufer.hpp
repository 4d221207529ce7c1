#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plumbing/diagonalize.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

/// Integer cycle sum c_v E_v over the vertices of one graph, stored densely in
/// declaration order.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coeffs_(n, 0) {}
  explicit LatticeVector(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Missing ids are zero; unknown ids are an error.
  static LatticeVector from_map(const PlumbingGraph& g, const std::map<std::string, long long>& coeffs) {
    LatticeVector v(g.size());
    for (const auto& [id, c] : coeffs) v.coeffs_[g.index_of(id)] = c;
    return v;
  }
  static LatticeVector basis(const PlumbingGraph& g, PlumbingGraph::Index i) {
    LatticeVector v(g.size());
    v.coeffs_.at(i) = 1;
    return v;
  }
  static LatticeVector ones(const PlumbingGraph& g) {
    LatticeVector v(g.size());
    for (auto& c : v.coeffs_) c = 1;
    return v;
  }

  std::size_t size() const noexcept { return coeffs_.size(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  LatticeVector& operator+=(const LatticeVector& o) {
    if (o.size() != size()) throw precondition_error("lattice vectors of different graphs");
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  /// `id:coeff,...` in declaration order (zeros included).
  std::string str(const PlumbingGraph& g) const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += g.id(i) + ':' + coeffs_[i].str();
    }
    return out;
  }

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficients k_v = -w(v) - 2 of the canonical class. They are coordinates in the
/// dual basis: <K, E_v> = k_v, which is what chi pairs against.
inline LatticeVector canonical_vector(const PlumbingGraph& g) {
  LatticeVector k(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) k[v] = -BigInt(g.weight(v)) - 2;
  return k;
}

/// a^T G b for the intersection matrix G.
inline BigInt pairing(const PlumbingGraph& g, const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != g.size() || b.size() != g.size()) throw precondition_error("lattice vector size mismatch");
  BigInt s = 0;
  for (std::size_t v = 0; v < g.size(); ++v) s += BigInt(g.weight(v)) * a[v] * b[v];
  for (const auto& [u, v] : g.edges()) s += a[u] * b[v] + a[v] * b[u];
  return s;
}

/// chi(l) = -<l + K, l>/2.
inline BigInt chi(const PlumbingGraph& g, const LatticeVector& l) {
  const auto k = canonical_vector(g);
  BigInt s = pairing(g, l, l);
  for (std::size_t v = 0; v < g.size(); ++v) s += k[v] * l[v];
  if (s % 2 != 0) throw error("internal: <l+K,l> is odd");
  return -s / 2;
}

// ---------------------------------------------------------------------------
// Laufer's algorithm

enum class TieBreak { first, last, max_pairing, seeded_random };
enum class Verdict { lattice_L_space, not_lattice_L_space };
enum class LauferTerminal { converged, chi_dropped_early_exit, step_limit };

inline const char* to_string(TieBreak t) {
  switch (t) {
    case TieBreak::first: return "first";
    case TieBreak::last: return "last";
    case TieBreak::max_pairing: return "max";
    case TieBreak::seeded_random: return "random";
  }
  return "?";
}
inline const char* to_string(Verdict v) {
  return v == Verdict::lattice_L_space ? "lattice_L_space" : "not_lattice_L_space";
}
inline const char* to_string(LauferTerminal t) {
  switch (t) {
    case LauferTerminal::converged: return "converged";
    case LauferTerminal::chi_dropped_early_exit: return "chi_dropped_early_exit";
    case LauferTerminal::step_limit: return "step_limit";
  }
  return "?";
}

struct LauferStep {
  std::size_t index = 0;  // i of z_i
  std::string vertex;
  LatticeVector cycle;
  BigInt chi;
};

struct LauferTrace {
  std::vector<LauferStep> steps;
  LauferTerminal terminal = LauferTerminal::converged;
};

struct LauferOptions {
  TieBreak tie_break = TieBreak::first;
  std::uint64_t seed = 0;
  bool trace = false;
  bool early_exit = true;
};

struct LauferResult {
  std::optional<LatticeVector> z_min;  // set iff converged
  BigInt chi_min;                      // chi where the run stopped
  Verdict verdict = Verdict::not_lattice_L_space;
  LauferTerminal terminal = LauferTerminal::converged;
  std::size_t steps = 0;
  std::optional<LauferTrace> trace;
};

/// One trace line: `step=<i> vertex=<id> chi=<n> cycle=<id:coeff,...>`.
inline std::string format_trace_line(const PlumbingGraph& g, const LauferStep& s) {
  return "step=" + std::to_string(s.index) + " vertex=" + s.vertex + " chi=" + s.chi.str() +
         " cycle=" + s.cycle.str(g);
}

namespace detail {

inline std::size_t laufer_step_limit(const PlumbingGraph& g) {
  Weight max_abs = 0;
  for (const auto& v : g.vertices()) max_abs = std::max<Weight>(max_abs, v.weight < 0 ? -v.weight : v.weight);
  const std::size_t n = g.size();
  return std::max<std::size_t>(100000, 10 * n * n * static_cast<std::size_t>(max_abs + 2));
}

}  // namespace detail

/// Starting from z_0 = sum E_v, adds E_v for some v with <z, E_v> > 0 until no such
/// v exists. chi(z + E_v) = chi(z) + 1 - <z, E_v>, so chi never increases; with
/// early_exit the run stops at the first drop below 1.
inline LauferResult laufer_run(const PlumbingGraph& g, const LauferOptions& opts = {}) {
  if (!is_negative_definite(g))
    throw not_negative_definite("Laufer's algorithm needs a negative-definite graph (termination)");
  const std::size_t n = g.size();
  LatticeVector z = LatticeVector::ones(g);
  BigInt current_chi = chi(g, z);
  if (current_chi != 1) throw error("internal: chi(z_0) = " + current_chi.str() + " != 1");

  std::vector<BigInt> pair(n);
  for (std::size_t v = 0; v < n; ++v) pair[v] = BigInt(g.weight(v)) + BigInt(g.valence(v));

  std::mt19937_64 rng(opts.seed);
  LauferResult result;
  if (opts.trace) result.trace.emplace();
  const std::size_t limit = detail::laufer_step_limit(g);
  std::vector<std::size_t> candidates;

  for (;;) {
    candidates.clear();
    for (std::size_t v = 0; v < n; ++v)
      if (pair[v] > 0) candidates.push_back(v);
    if (candidates.empty()) {
      result.terminal = LauferTerminal::converged;
      result.z_min = z;
      break;
    }
    std::size_t pick = candidates.front();
    switch (opts.tie_break) {
      case TieBreak::first: break;
      case TieBreak::last: pick = candidates.back(); break;
      case TieBreak::max_pairing:
        for (auto v : candidates)
          if (pair[v] > pair[pick]) pick = v;
        break;
      case TieBreak::seeded_random:
        pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        break;
    }

    const BigInt next_chi = current_chi + 1 - pair[pick];
    z[pick] += 1;
    pair[pick] += g.weight(pick);
    for (auto u : g.neighbors(pick)) pair[u] += 1;
    current_chi = next_chi;
    ++result.steps;
    if (result.trace) result.trace->steps.push_back({result.steps, g.id(pick), z, current_chi});

    if (opts.early_exit && current_chi < 1) {
      result.terminal = LauferTerminal::chi_dropped_early_exit;
      break;
    }
    if (result.steps >= limit) {
      if (result.trace) result.trace->terminal = LauferTerminal::step_limit;
      throw error("internal: Laufer step limit " + std::to_string(limit) + " exceeded");
    }
  }
  result.chi_min = current_chi;
  if (result.trace) result.trace->terminal = result.terminal;
  result.verdict = (result.terminal == LauferTerminal::converged && current_chi == 1) ? Verdict::lattice_L_space
                                                                                     : Verdict::not_lattice_L_space;
  return result;
}

/// Deficiency form of the same test: labels start at d(v); a label >= 2 means not an
/// L-space; otherwise a label-1 vertex v gets w(v) added and its neighbors +1.
inline Verdict deficiency_iteration(const PlumbingGraph& g) {
  if (!is_negative_definite(g))
    throw not_negative_definite("deficiency iteration needs a negative-definite graph (termination)");
  const std::size_t n = g.size();
  std::vector<std::int64_t> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = deficiency(g, v);
  const std::size_t limit = detail::laufer_step_limit(g);
  for (std::size_t step = 0;; ++step) {
    std::optional<std::size_t> pick;
    for (std::size_t v = 0; v < n; ++v) {
      if (label[v] >= 2) return Verdict::not_lattice_L_space;
      if (label[v] == 1 && !pick) pick = v;
    }
    if (!pick) return Verdict::lattice_L_space;
    if (step >= limit) throw error("internal: deficiency iteration step limit exceeded");
    label[*pick] += g.weight(*pick);
    for (auto u : g.neighbors(*pick)) label[u] += 1;
  }
}

// ---------------------------------------------------------------------------
// Brute-force minimal cycle (test oracle)

class box_too_small : public error {
 public:
  using error::error;
};

/// Scans [1, box]^N for x with <x, E_v> <= 0 for all v and returns the coordinatewise
/// minimum of those, after checking that the minimum is itself one of them.
inline LatticeVector min_cycle_bruteforce(const PlumbingGraph& g, std::int64_t box) {
  const std::size_t n = g.size();
  if (box < 1) throw precondition_error("box bound must be >= 1");
  if (n > 12) throw precondition_error("brute-force minimal cycle is limited to 12 vertices");
  if (!is_negative_definite(g)) throw not_negative_definite("brute-force minimal cycle needs a negative-definite graph");

  std::vector<std::int64_t> x(n, 1), best(n, box + 1);
  bool found = false;
  auto is_candidate = [&](const std::vector<std::int64_t>& y) {
    for (std::size_t v = 0; v < n; ++v) {
      std::int64_t s = g.weight(v) * y[v];
      for (auto u : g.neighbors(v)) s += y[u];
      if (s > 0) return false;
    }
    return true;
  };
  for (;;) {
    if (is_candidate(x)) {
      found = true;
      for (std::size_t v = 0; v < n; ++v) best[v] = std::min(best[v], x[v]);
    }
    std::size_t i = 0;
    while (i < n && x[i] == box) x[i++] = 1;
    if (i == n) break;
    ++x[i];
  }
  if (!found) throw box_too_small("no cycle with non-positive pairings in [1, " + std::to_string(box) + "]^N");
  if (!is_candidate(best)) throw box_too_small("coordinatewise minimum of the candidates is not a candidate");
  std::vector<BigInt> out(best.begin(), best.end());
  return LatticeVector(std::move(out));
}

}  // namespace plumbing
