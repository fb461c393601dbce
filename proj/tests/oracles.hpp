#pragma once

// Test-only reference computations. None of these call into the library's
// elimination or BFS code, so they can check it independently.

#include "rowspace/graph.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace rowspace::test {

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int_matrix(const Graph& g) {
  IntMatrix m(g.order(), std::vector<int>(g.order(), 0));
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = 0; j < g.order(); ++j) m[i][j] = g.adjacent(i, j) ? 1 : 0;
  return m;
}

/// Rank by plain rational elimination choosing the largest-magnitude pivot
/// (different pivot rule and arithmetic from the library's Bareiss path).
inline std::size_t reference_rank(const std::vector<std::vector<mpq_class>>& input) {
  auto a = input;
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows; ++i)
      if (abs(a[i][c]) > abs(a[best][c])) best = i;
    if (a[best][c] == 0) continue;
    std::swap(a[best], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t reference_rank(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int v : m[i]) q[i].emplace_back(v);
  return reference_rank(q);
}

/// x is in the row space of m iff appending it does not raise the rank.
inline bool reference_in_row_space(const IntMatrix& m, const std::vector<std::uint8_t>& x) {
  IntMatrix aug = m;
  aug.emplace_back(x.begin(), x.end());
  return reference_rank(aug) == reference_rank(m);
}

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = kInfinite / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (Vertex i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (Vertex j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& v : row)
      if (v >= inf) v = kInfinite;
  return d;
}

inline std::size_t reference_diameter(const Graph& g) {
  std::size_t best = 0;
  for (const auto& row : floyd_warshall(g))
    for (std::size_t v : row) best = std::max(best, v);
  return best;
}

/// Connectivity by union-find over the edge list.
inline bool reference_connected(const Graph& g) {
  std::vector<std::size_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
  const std::size_t root = find(0);
  for (Vertex v = 0; v < g.order(); ++v)
    if (find(v) != root) return false;
  return true;
}

/// Petersen graph as the Kneser graph K(5,2): 2-subsets adjacent iff disjoint.
inline Graph kneser_petersen() {
  std::vector<std::pair<int, int>> sets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      auto [a, b] = sets[i];
      auto [c, d] = sets[j];
      if (a != c && a != d && b != c && b != d) e.emplace_back(i, j);
    }
  return Graph(10, e);
}

/// Uniform random labeled graph with edge probability p.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (n == 1 || (g.size() > 0 && reference_connected(g))) return g;
  }
}

}  // namespace rowspace::test
