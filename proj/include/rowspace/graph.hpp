#pragma once

// Simple undirected labeled graphs stored as per-vertex neighborhood bitsets,
// plus the structural queries and vertex-multiplication operations the
// witness constructions are built on. Vertices are labeled 0..n-1.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rowspace {

using Vertex = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

/// Distance value used for unreachable pairs and for the diameter of a
/// disconnected graph.
inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

/// Raised when an operation needs a structural property (e.g. connectivity)
/// the input graph does not have.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  }

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Builds a graph from explicit neighborhood rows; rejects loops and
  /// asymmetric input.
  static Graph from_rows(std::vector<Bitset> rows) {
    Graph g(rows.size());
    const std::size_t n = rows.size();
    for (Vertex i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw std::invalid_argument("adjacency row has wrong length");
      if (rows[i].test(i)) throw std::invalid_argument("adjacency has a loop at vertex " + std::to_string(i));
    }
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = rows[i].find_first(); j != Bitset::npos; j = rows[i].find_next(j))
        if (!rows[j].test(i)) throw std::invalid_argument("adjacency is not symmetric");
    g.adj_ = std::move(rows);
    return g;
  }

  /// Builds a graph from a square 0/1 matrix given row by row.
  static Graph from_matrix(const std::vector<std::vector<int>>& m) {
    std::vector<Bitset> rows(m.size(), Bitset(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].size() != m.size()) throw std::invalid_argument("adjacency matrix is not square");
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[i][j] != 0 && m[i][j] != 1) throw std::invalid_argument("adjacency entries must be 0 or 1");
        if (m[i][j] == 1) rows[i].set(j);
      }
    }
    return from_rows(std::move(rows));
  }

  std::size_t order() const { return adj_.size(); }

  std::size_t size() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
  }

  const Bitset& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex i = 0; i < order(); ++i)
      for (Vertex j = adj_[i].find_next(i); j != Bitset::npos; j = adj_[i].find_next(j)) out.emplace_back(i, j);
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= adj_.size())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                              std::to_string(adj_.size()));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  std::vector<Bitset> adj_;
};

/// Vertex multiplicities driving a blow-up; every entry is at least 1.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(std::vector<std::size_t> m) : m_(std::move(m)) {
    if (m_.empty()) throw std::invalid_argument("multiplicity vector is empty");
    for (std::size_t i = 0; i < m_.size(); ++i)
      if (m_[i] == 0) throw std::invalid_argument("multiplicity at position " + std::to_string(i) + " is zero");
  }

  static MultiplicityVector ones(std::size_t n) { return MultiplicityVector(std::vector<std::size_t>(n, 1)); }

  std::size_t size() const { return m_.size(); }
  std::size_t operator[](std::size_t i) const { return m_.at(i); }
  std::size_t total() const { return std::accumulate(m_.begin(), m_.end(), std::size_t{0}); }
  const std::vector<std::size_t>& values() const { return m_; }

  /// First blown-up vertex of each block under block-contiguous layout.
  std::vector<Vertex> block_offsets() const {
    std::vector<Vertex> off(m_.size());
    std::exclusive_scan(m_.begin(), m_.end(), off.begin(), Vertex{0});
    return off;
  }

  /// Maps each blown-up vertex to the original vertex it was cloned from.
  std::vector<Vertex> block_of() const {
    std::vector<Vertex> out;
    out.reserve(total());
    for (std::size_t i = 0; i < m_.size(); ++i) out.insert(out.end(), m_[i], i);
    return out;
  }

 private:
  std::vector<std::size_t> m_;
};

/// A shortest path realizing the diameter: path[0] and path[ell] are at
/// distance ell.
struct PathWitnessContext {
  std::vector<Vertex> path;
  std::size_t ell = 0;
};

inline std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).count(); }

/// BFS distances from source; unreachable vertices get kInfinite.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::size_t> dist(g.order(), kInfinite);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const Bitset& nb = g.neighbors(u);
    for (Vertex w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kInfinite; });
}

/// Maximum shortest-path distance over all pairs, or kInfinite if g is
/// disconnected.
inline std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (std::size_t d : bfs_distances(g, u)) {
      if (d == kInfinite) return kInfinite;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Picks the lexicographically smallest pair (u, v), u < v, at maximum
/// distance, then the lexicographically smallest shortest u-v path.
inline PathWitnessContext diametral_geodesic(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  Vertex bu = 0, bv = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto d = bfs_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (d[v] == kInfinite) throw StructuralError("diametral geodesic requires a connected graph");
      if (d[v] > best) {
        best = d[v];
        bu = u;
        bv = v;
      }
    }
  }
  PathWitnessContext ctx;
  ctx.ell = best;
  auto to_target = bfs_distances(g, bv);
  Vertex cur = bu;
  ctx.path.push_back(cur);
  while (cur != bv) {
    const Bitset& nb = g.neighbors(cur);
    Vertex next = nb.find_first();
    while (to_target[next] + 1 != to_target[cur]) next = nb.find_next(next);
    cur = next;
    ctx.path.push_back(cur);
  }
  return ctx;
}

/// Replaces vertex i by an independent set of m[i] clones; clones of i and j
/// are joined iff i ~ j. Blocks are laid out contiguously in input order.
inline Graph multiply_vertices(const Graph& g, const MultiplicityVector& m) {
  if (m.size() != g.order())
    throw std::invalid_argument("multiplicity vector length " + std::to_string(m.size()) +
                                " does not match graph order " + std::to_string(g.order()));
  const std::size_t total = m.total();
  const auto offset = m.block_offsets();
  std::vector<Bitset> rows(total, Bitset(total));
  for (Vertex i = 0; i < g.order(); ++i) {
    Bitset blown(total);
    const Bitset& nb = g.neighbors(i);
    for (Vertex j = nb.find_first(); j != Bitset::npos; j = nb.find_next(j))
      for (std::size_t s = 0; s < m[j]; ++s) blown.set(offset[j] + s);
    for (std::size_t s = 0; s < m[i]; ++s) rows[offset[i] + s] = blown;
  }
  return Graph::from_rows(std::move(rows));
}

/// Adds a new vertex (labeled n) joined to every neighbor of v.
inline Graph duplicate_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  const std::size_t n = g.order();
  std::vector<Bitset> rows(n + 1, Bitset(n + 1));
  for (Vertex i = 0; i < n; ++i) {
    const Bitset& nb = g.neighbors(i);
    for (Vertex j = nb.find_first(); j != Bitset::npos; j = nb.find_next(j)) rows[i].set(j);
    if (nb.test(v)) {
      rows[i].set(n);
      rows[n].set(i);
    }
  }
  return Graph::from_rows(std::move(rows));
}

/// First edge (i, j), i < j, in lexicographic order whose endpoints have
/// disjoint neighborhoods.
inline std::optional<Edge> find_adjacent_disjoint_pair(const Graph& g) {
  for (Vertex i = 0; i < g.order(); ++i) {
    const Bitset& ni = g.neighbors(i);
    for (Vertex j = ni.find_next(i); j != Bitset::npos; j = ni.find_next(j))
      if (!ni.intersects(g.neighbors(j))) return Edge{i, j};
  }
  return std::nullopt;
}

inline bool is_dominating(const Graph& g, Vertex v) { return degree(g, v) + 1 == g.order(); }

inline bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!is_dominating(g, v)) return false;
  return true;
}

/// True iff no two vertices share a neighborhood.
inline bool is_reduced(const Graph& g) {
  std::vector<Bitset> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v));
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  const std::size_t k = vertices.size();
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (g.adjacent(vertices[a], vertices[b])) rows[a].set(b);
  return Graph::from_rows(std::move(rows));
}

/// Connected components, each sorted ascending, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    auto d = bfs_distances(g, s);
    std::vector<Vertex> comp;
    for (Vertex v = 0; v < g.order(); ++v)
      if (d[v] != kInfinite) {
        comp.push_back(v);
        seen[v] = true;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

/// Relabels so that vertex order[k] of g becomes vertex k of the result.
inline Graph permute(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.order()) throw std::invalid_argument("permutation length mismatch");
  return induced_subgraph(g, order);
}

/// Result of contracting every class of twins (vertices with equal
/// neighborhoods) to one representative.
struct TwinQuotient {
  Graph reduced;
  std::vector<std::size_t> class_of;      // vertex of g -> vertex of reduced
  std::vector<Vertex> representative;     // vertex of reduced -> first vertex of g in the class
  MultiplicityVector multiplicity;
};

/// Classes are numbered by their first member, so reduced vertex order follows
/// the original labeling.
inline TwinQuotient contract_twins(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> class_of(n, kInfinite);
  std::vector<Vertex> rep;
  std::vector<std::size_t> count;
  for (Vertex v = 0; v < n; ++v) {
    if (class_of[v] != kInfinite) continue;
    class_of[v] = rep.size();
    rep.push_back(v);
    count.push_back(1);
    for (Vertex w = v + 1; w < n; ++w)
      if (class_of[w] == kInfinite && g.neighbors(w) == g.neighbors(v)) {
        class_of[w] = class_of[v];
        ++count.back();
      }
  }
  Graph reduced = induced_subgraph(g, rep);
  return TwinQuotient{std::move(reduced), std::move(class_of), std::move(rep), MultiplicityVector(std::move(count))};
}

}  // namespace rowspace
