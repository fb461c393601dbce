#pragma once

// Named graphs and parametric families.
//
// Labeling conventions:
//   path(n)        0-1-...-(n-1)
//   cycle(n)       0-1-...-(n-1)-0
//   star(k)        K_{1,k}; center 0, leaves 1..k
//   wheel(n)       n vertices total; hub 0, rim cycle 1..n-1
//   triangle_fan(n) n vertices total (n odd, n >= 5); hub 0, triangles {0, 2t+1, 2t+2}
//   petersen       outer cycle 0..4, spokes i-(i+5), inner pentagram 5+i ~ 5+(i+2)%5
//   gamma0         triangle 0,1,2; pendants 3,4,5 on 0,1,2; vertex 6 joined to 3,4,5
//   paw            triangle 0,1,2; pendant 3 on 2
//   bull           triangle 0,1,2; pendants 3 on 0 and 4 on 1
//   house          square 0-1-2-3-0; roof apex 4 joined to 2,3
//   antenna        house plus vertex 5 pendant on the apex 4
//   co_c6          triangles 0,1,2 and 3,4,5 with matching 0-3, 1-4, 2-5
//   figure1_gamma2 six-vertex graph with edges 01 04 12 23 25 34 45
//   D6, D14, D15, D17  literal rank-5 adjacency matrices

#include "rowspace/graph.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rowspace::families {

enum class Family {
  path,
  cycle,
  complete,
  star,
  wheel,
  triangle_fan,
  petersen,
  gamma0,
  paw,
  bull,
  antenna,
  house,
  co_c6,
  k4,
  d6,
  d14,
  d15,
  d17,
  figure1_gamma2,
};

struct FamilySpec {
  Family family;
  std::optional<std::size_t> size;
};

struct FamilyInfo {
  Family family;
  std::string_view name;
  bool parametric;
  std::size_t min_size;
};

inline constexpr std::array<FamilyInfo, 19> kFamilies{{
    {Family::path, "path", true, 1},
    {Family::cycle, "cycle", true, 3},
    {Family::complete, "complete", true, 1},
    {Family::star, "star", true, 1},
    {Family::wheel, "wheel", true, 4},
    {Family::triangle_fan, "triangle-fan", true, 5},
    {Family::petersen, "petersen", false, 0},
    {Family::gamma0, "gamma0", false, 0},
    {Family::paw, "paw", false, 0},
    {Family::bull, "bull", false, 0},
    {Family::antenna, "antenna", false, 0},
    {Family::house, "house", false, 0},
    {Family::co_c6, "coC6", false, 0},
    {Family::k4, "K4", false, 0},
    {Family::d6, "D6", false, 0},
    {Family::d14, "D14", false, 0},
    {Family::d15, "D15", false, 0},
    {Family::d17, "D17", false, 0},
    {Family::figure1_gamma2, "figure1-gamma2", false, 0},
}};

inline const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw std::logic_error("unknown family");
}

inline Family parse_family(std::string_view name) {
  for (const auto& i : kFamilies)
    if (i.name == name) return i.family;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

inline Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph star(std::size_t leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph wheel(std::size_t n) {
  if (n < 4) throw std::invalid_argument("wheel needs n >= 4 vertices");
  const std::size_t rim = n - 1;
  std::vector<Edge> e;
  for (Vertex i = 0; i < rim; ++i) {
    e.emplace_back(0, i + 1);
    e.emplace_back(i + 1, (i + 1) % rim + 1);
  }
  return Graph(n, e);
}

inline Graph triangle_fan(std::size_t n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("triangle fan needs an odd number n >= 5 of vertices");
  std::vector<Edge> e;
  for (Vertex t = 0; 2 * t + 2 < n; ++t) {
    e.emplace_back(0, 2 * t + 1);
    e.emplace_back(0, 2 * t + 2);
    e.emplace_back(2 * t + 1, 2 * t + 2);
  }
  return Graph(n, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

inline Graph gamma0() { return Graph(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}}); }
inline Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }
inline Graph bull() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}); }
inline Graph house() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}); }
inline Graph antenna() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}, {4, 5}}); }
inline Graph co_c6() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}
inline Graph figure1_gamma1() { return star(4); }
inline Graph figure1_gamma2() { return Graph(6, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}); }

// Rank-5 reduced graphs, transcribed row by row.
inline const std::vector<std::vector<int>>& d6_matrix() {
  static const std::vector<std::vector<int>> m{
      {0, 1, 0, 0, 0, 1, 0}, {1, 0, 1, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1},
      {0, 0, 0, 1, 0, 0, 1}, {1, 1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 1, 0, 0},
  };
  return m;
}
inline const std::vector<std::vector<int>>& d14_matrix() {
  static const std::vector<std::vector<int>> m{
      {0, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 1, 1},
      {0, 0, 1, 0, 0, 1}, {1, 1, 1, 0, 0, 1}, {1, 0, 1, 1, 1, 0},
  };
  return m;
}
inline const std::vector<std::vector<int>>& d15_matrix() {
  static const std::vector<std::vector<int>> m{
      {0, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 1}, {0, 1, 0, 1, 0, 1},
      {0, 0, 1, 0, 1, 1}, {1, 1, 0, 1, 0, 1}, {1, 1, 1, 1, 1, 0},
  };
  return m;
}
inline const std::vector<std::vector<int>>& d17_matrix() {
  static const std::vector<std::vector<int>> m{
      {0, 1, 0, 0, 1, 1, 1}, {1, 0, 1, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 1, 1}, {0, 0, 1, 0, 0, 1, 1},
      {1, 1, 1, 0, 0, 1, 0}, {1, 0, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 0, 1, 0},
  };
  return m;
}

inline Graph build(const FamilySpec& spec) {
  const FamilyInfo& fi = info(spec.family);
  if (fi.parametric) {
    if (!spec.size) throw std::invalid_argument("family '" + std::string(fi.name) + "' needs a size");
    if (*spec.size < fi.min_size)
      throw std::invalid_argument("family '" + std::string(fi.name) + "' needs size >= " + std::to_string(fi.min_size));
  } else if (spec.size) {
    throw std::invalid_argument("family '" + std::string(fi.name) + "' takes no size");
  }
  switch (spec.family) {
    case Family::path: return path(*spec.size);
    case Family::cycle: return cycle(*spec.size);
    case Family::complete: return complete(*spec.size);
    case Family::star: return star(*spec.size);
    case Family::wheel: return wheel(*spec.size);
    case Family::triangle_fan: return triangle_fan(*spec.size);
    case Family::petersen: return petersen();
    case Family::gamma0: return gamma0();
    case Family::paw: return paw();
    case Family::bull: return bull();
    case Family::antenna: return antenna();
    case Family::house: return house();
    case Family::co_c6: return co_c6();
    case Family::k4: return complete(4);
    case Family::d6: return Graph::from_matrix(d6_matrix());
    case Family::d14: return Graph::from_matrix(d14_matrix());
    case Family::d15: return Graph::from_matrix(d15_matrix());
    case Family::d17: return Graph::from_matrix(d17_matrix());
    case Family::figure1_gamma2: return figure1_gamma2();
  }
  throw std::logic_error("unhandled family");
}

/// Closed-form rank of the path on n vertices.
inline std::size_t rank_formula_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path rank needs n >= 1");
  return n % 2 == 0 ? n : n - 1;
}

inline std::size_t rank_formula_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle rank needs n >= 3");
  return n % 4 == 0 ? n - 2 : n;
}

/// Order of the Kotlov-Lovasz reduced graph of rank r.
inline std::size_t kotlov_lovasz_n(std::size_t r) {
  if (r < 2) throw std::invalid_argument("Kotlov-Lovasz order needs r >= 2");
  if (r % 2 == 0) return (std::size_t{1} << ((r + 2) / 2)) - 2;
  return 5 * (std::size_t{1} << ((r - 3) / 2)) - 2;
}

enum class HBase { c5, gamma0, petersen };

/// Starts from C5, Gamma0 or Petersen and applies the requested chain of
/// degree-2 duplications; each step must target a vertex of degree exactly 2
/// in the current graph.
inline Graph h_family_generate(HBase base, const std::vector<Vertex>& duplications) {
  Graph g = base == HBase::c5 ? cycle(5) : base == HBase::gamma0 ? gamma0() : petersen();
  for (Vertex v : duplications) {
    g.check_vertex(v);
    if (degree(g, v) != 2)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " + std::to_string(degree(g, v)) +
                                  ", only degree-2 vertices may be duplicated");
    g = duplicate_vertex(g, v);
  }
  return g;
}

}  // namespace rowspace::families
