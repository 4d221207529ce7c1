#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

struct Letter {
  std::string generator;
  std::int64_t exponent = 0;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A relator: a word set equal to the identity.
using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relations;
  std::vector<std::pair<std::string, std::vector<std::string>>> neighbor_ordering;  // per vertex, cyclic
};

using CyclicOrders = std::map<std::string, std::vector<std::string>>;

/// One generator per vertex; for each vertex v with cyclically ordered neighbors
/// u_1..u_m the relator v^{-w(v)} (u_1 ... u_m)^{-1}; for each edge a commutator.
/// Vertices without an explicit order use neighbor declaration order.
inline GroupPresentation mumford_presentation(const PlumbingGraph& g, const CyclicOrders& orders = {}) {
  for (const auto& [id, order] : orders) {
    const auto v = g.find(id);
    if (!v) throw precondition_error("cyclic order given for unknown vertex '" + id + "'");
    std::vector<std::string> expected;
    for (auto u : g.neighbors(*v)) expected.push_back(g.id(u));
    auto given = order;
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    if (given != expected)
      throw precondition_error("cyclic order at '" + id + "' is not a permutation of its neighbors");
  }

  GroupPresentation p;
  for (std::size_t v = 0; v < g.size(); ++v) {
    p.generators.push_back(g.id(v));
    std::vector<std::string> order;
    if (const auto it = orders.find(g.id(v)); it != orders.end()) {
      order = it->second;
    } else {
      for (auto u : g.neighbors(v)) order.push_back(g.id(u));
    }
    Word w;
    if (g.weight(v) != 0) w.push_back({g.id(v), -g.weight(v)});
    for (auto it = order.rbegin(); it != order.rend(); ++it) w.push_back({*it, -1});
    p.relations.push_back(std::move(w));
    p.neighbor_ordering.emplace_back(g.id(v), std::move(order));
  }
  for (const auto& [a, b] : g.edges())
    p.relations.push_back({{g.id(a), 1}, {g.id(b), 1}, {g.id(a), -1}, {g.id(b), -1}});
  return p;
}

/// `a^2 b^-1 c^-1`; exponent 1 is omitted and the empty word prints as `1`.
inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.generator;
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

inline std::string format_presentation(const GroupPresentation& p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += '\n';
  for (const auto& r : p.relations) out += format_word(r) + '\n';
  return out;
}

/// Diagonal of the Smith normal form (d1 | d2 | ...), non-negative, zeros last.
/// The result has min(rows, cols) entries.
inline std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t rank_bound = std::min(rows, cols);
  using boost::multiprecision::abs;

  for (std::size_t t = 0; t < rank_bound; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!piv || abs(a[i][j]) < abs(a[piv->first][piv->second]))) piv = {i, j};
      if (!piv) break;  // trailing block is zero
      std::swap(a[t], a[piv->first]);
      for (auto& row : a) std::swap(row[t], row[piv->second]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold an offending row in.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*bad_row][j];
    }
  }
  std::vector<BigInt> diag(rank_bound);
  for (std::size_t t = 0; t < rank_bound; ++t) diag[t] = abs(a[t][t]);
  return diag;
}

/// Elementary divisors of the abelianized group, one per generator (zeros for free
/// Z summands). The product of the nonzero ones is the order of the torsion part.
inline std::vector<BigInt> abelianization_invariants(const GroupPresentation& p) {
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < p.generators.size(); ++i) column.emplace(p.generators[i], i);
  const std::size_t n = p.generators.size();
  std::vector<std::vector<BigInt>> m;
  for (const auto& r : p.relations) {
    std::vector<BigInt> row(n, 0);
    for (const auto& l : r) {
      const auto it = column.find(l.generator);
      if (it == column.end()) throw precondition_error("relation uses unknown generator '" + l.generator + "'");
      row[it->second] += l.exponent;
    }
    if (std::any_of(row.begin(), row.end(), [](const BigInt& x) { return x != 0; })) m.push_back(std::move(row));
  }
  auto diag = smith_diagonal(std::move(m));
  diag.resize(n, 0);
  // Nonzero divisors ascending (already a divisibility chain), then zeros.
  std::stable_partition(diag.begin(), diag.end(), [](const BigInt& x) { return x != 0; });
  return diag;
}

}  // namespace plumbing
