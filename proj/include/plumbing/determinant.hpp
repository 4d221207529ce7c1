#pragma once

#include <utility>
#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

/// Fraction-free (Bareiss) elimination with row pivoting. Exact for any square matrix.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Division is exact by Sylvester's identity.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

inline BigInt bareiss_determinant(const IntersectionMatrix& im) {
  const std::size_t n = im.dimension();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = im(i, j);
  return bareiss_determinant(std::move(m));
}

/// det of the intersection matrix by repeatedly eliminating a leaf: the accumulator
/// picks up the leaf's current entry and its neighbor's entry gains -1/entry.
/// Falls back to bareiss_determinant if some leaf entry is exactly zero first.
inline BigInt tree_determinant(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  std::vector<Rational> entry;
  entry.reserve(n);
  for (std::size_t v = 0; v < n; ++v) entry.emplace_back(static_cast<long long>(g.weight(v)));
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.valence(v);

  Rational acc(1);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t leaf = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && degree[v] <= 1) {
        leaf = v;
        break;
      }
    }
    removed[leaf] = true;
    std::size_t parent = n;
    for (auto u : g.neighbors(leaf))
      if (!removed[u]) parent = u;
    if (parent == n) {
      acc *= entry[leaf];  // last vertex
      continue;
    }
    if (entry[leaf].is_zero()) return bareiss_determinant(intersection_matrix(g));
    acc *= entry[leaf];
    entry[parent] -= entry[leaf].reciprocal();
    --degree[parent];
  }
  if (!acc.is_integer()) throw error("internal: non-integral tree determinant " + acc.str());
  return acc.num();
}

}  // namespace plumbing
