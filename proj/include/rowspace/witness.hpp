#pragma once

// Constructive witnesses: non-zero (0,1)-vectors in the row space of A(g)
// that are not rows of A(g), each carried with an exact coefficient
// certificate. Every strategy verifies what it returns.

#include "rowspace/families.hpp"
#include "rowspace/graph.hpp"
#include "rowspace/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rowspace {

enum class Strategy {
  complete_all_ones,
  diam_ge4_path,
  disjoint_neighborhood,
  dominating_regular,
  lifted,
  catalog_rank5,
  oracle,
};

inline constexpr std::array<Strategy, 7> kAllStrategies{
    Strategy::complete_all_ones, Strategy::disjoint_neighborhood, Strategy::diam_ge4_path,
    Strategy::dominating_regular, Strategy::catalog_rank5,         Strategy::lifted,
    Strategy::oracle,
};

inline std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::complete_all_ones: return "complete-all-ones";
    case Strategy::diam_ge4_path: return "diam-ge4-path";
    case Strategy::disjoint_neighborhood: return "disjoint-neighborhood";
    case Strategy::dominating_regular: return "dominating-regular";
    case Strategy::lifted: return "lifted";
    case Strategy::catalog_rank5: return "catalog-rank5";
    case Strategy::oracle: return "oracle";
  }
  return "unknown";
}

inline Strategy parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies)
    if (strategy_name(s) == name) return s;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

struct Witness {
  BitVector vector;
  MembershipCertificate certificate;
  Strategy strategy;
};

struct StrategyOutcome {
  bool applicable = false;
  std::optional<Witness> witness;
  std::string reason;

  static StrategyOutcome inapplicable(std::string why) { return {false, std::nullopt, std::move(why)}; }
  static StrategyOutcome failed(std::string why) { return {true, std::nullopt, std::move(why)}; }
  static StrategyOutcome success(Witness w) { return {true, std::move(w), {}}; }
};

/// Exact check of (A^T c) = x computed straight from the neighborhoods.
inline bool certificate_reproduces(const Graph& g, std::span<const Rational> c, std::span<const std::uint8_t> x) {
  const std::size_t n = g.order();
  if (c.size() != n || x.size() != n) return false;
  Rational acc;
  for (Vertex j = 0; j < n; ++j) {
    acc = 0;
    const Bitset& nb = g.neighbors(j);
    for (Vertex i = nb.find_first(); i != Bitset::npos; i = nb.find_next(i)) acc += c[i];
    if (acc != x[j]) return false;
  }
  return true;
}

/// A witness is valid for g iff its vector is a non-zero (0,1)-vector, the
/// certificate reproduces it exactly, and it is not a row of A(g).
inline bool verify_witness(const Graph& g, const Witness& w) {
  const auto& x = w.vector;
  if (x.size() != g.order()) return false;
  bool nonzero = false;
  for (auto b : x) {
    if (b > 1) return false;
    nonzero = nonzero || b == 1;
  }
  if (!nonzero) return false;
  if (w.certificate.target != x) return false;
  if (!certificate_reproduces(g, w.certificate.coefficients, x)) return false;
  return !is_row(g, x).has_value();
}

namespace detail {

inline StrategyOutcome checked(const Graph& g, Witness w) {
  if (!verify_witness(g, w))
    return StrategyOutcome::failed(std::string(strategy_name(w.strategy)) + " produced a vector that failed verification");
  return StrategyOutcome::success(std::move(w));
}

/// Sum of rows a and b (a != b), with the matching indicator certificate.
inline Witness row_sum(const Graph& g, Vertex a, Vertex b, Strategy s) {
  const std::size_t n = g.order();
  Witness w{BitVector(n, 0), {std::vector<Rational>(n), {}}, s};
  for (Vertex j = 0; j < n; ++j) w.vector[j] = static_cast<std::uint8_t>(g.adjacent(a, j) + g.adjacent(b, j));
  w.certificate.coefficients[a] = 1;
  w.certificate.coefficients[b] = 1;
  w.certificate.target = w.vector;
  return w;
}

inline BitVector all_ones(std::size_t n) { return BitVector(n, 1); }

}  // namespace detail

/// All-ones vector as the average of all rows scaled by 1/(n-1).
inline StrategyOutcome witness_complete(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || !is_complete(g)) return StrategyOutcome::inapplicable("graph is not complete with n >= 2");
  Witness w{detail::all_ones(n), {std::vector<Rational>(n, fraction(1, static_cast<long>(n - 1))), detail::all_ones(n)},
            Strategy::complete_all_ones};
  return detail::checked(g, std::move(w));
}

/// Sum of the rows at positions 1 and ell of a diametral geodesic of length
/// ell >= 4. On the path itself the sum is 1 exactly at positions 0, 2 and
/// ell-1; off the path the two rows never overlap.
inline StrategyOutcome witness_diam_ge4(const Graph& g) {
  if (!is_connected(g)) return StrategyOutcome::inapplicable("graph is disconnected");
  const std::size_t d = diameter(g);
  if (d < 4) return StrategyOutcome::inapplicable("diameter " + std::to_string(d) + " is below 4");
  const PathWitnessContext ctx = diametral_geodesic(g);
  return detail::checked(g, detail::row_sum(g, ctx.path[1], ctx.path[ctx.ell], Strategy::diam_ge4_path));
}

/// Sum of the rows of an adjacent pair with disjoint neighborhoods.
inline StrategyOutcome witness_disjoint_nbhd(const Graph& g) {
  const auto pair = find_adjacent_disjoint_pair(g);
  if (!pair) return StrategyOutcome::inapplicable("no adjacent pair with disjoint neighborhoods");
  return detail::checked(g, detail::row_sum(g, pair->first, pair->second, Strategy::disjoint_neighborhood));
}

/// Exactly one dominating vertex v and every other vertex of common degree d
/// (1 <= d <= n-2): (n-d)/(n-1) R_v + 1/(n-1) sum of the other rows is the
/// all-ones vector.
inline StrategyOutcome witness_dominating_regular(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || is_complete(g)) return StrategyOutcome::inapplicable("graph is complete or too small");
  std::optional<Vertex> hub;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_dominating(g, v)) continue;
    if (hub) return StrategyOutcome::inapplicable("more than one dominating vertex");
    hub = v;
  }
  if (!hub) return StrategyOutcome::inapplicable("no dominating vertex");
  std::optional<std::size_t> common;
  for (Vertex v = 0; v < n; ++v) {
    if (v == *hub) continue;
    const std::size_t dv = degree(g, v);
    if (common && *common != dv) return StrategyOutcome::inapplicable("non-dominating vertices differ in degree");
    common = dv;
  }
  const std::size_t d = *common;
  if (d < 1 || d > n - 2) return StrategyOutcome::inapplicable("common degree out of range");
  Witness w{detail::all_ones(n), {std::vector<Rational>(n, fraction(1, static_cast<long>(n - 1))), detail::all_ones(n)},
            Strategy::dominating_regular};
  w.certificate.coefficients[*hub] = fraction(static_cast<long>(n - d), static_cast<long>(n - 1));
  return detail::checked(g, std::move(w));
}

/// A witness transported to a blow-up: vector entries repeated per clone and
/// each coefficient placed on the first clone of its vertex. The lifted
/// vector is guaranteed to be in the row space but may coincide with a row.
struct LiftedVector {
  BitVector vector;
  MembershipCertificate certificate;
  std::optional<Vertex> coincides_with_row;

  std::optional<Witness> witness() const {
    if (coincides_with_row) return std::nullopt;
    return Witness{vector, certificate, Strategy::lifted};
  }
};

/// Lifts along an arbitrary quotient map: vertex v of the blown-up graph is a
/// clone of class_of[v], and representative[i] is the clone carrying c_i.
inline LiftedVector lift_along(const Graph& blown, std::span<const std::size_t> class_of,
                               std::span<const Vertex> representative, const Witness& w) {
  const std::size_t n0 = w.vector.size();
  if (class_of.size() != blown.order() || representative.size() != n0 || w.certificate.coefficients.size() != n0)
    throw std::invalid_argument("lift dimensions do not match");
  LiftedVector out;
  out.vector.resize(blown.order());
  for (Vertex v = 0; v < blown.order(); ++v) out.vector[v] = w.vector.at(class_of[v]);
  out.certificate.coefficients.assign(blown.order(), Rational(0));
  for (std::size_t i = 0; i < n0; ++i) out.certificate.coefficients.at(representative[i]) = w.certificate.coefficients[i];
  out.certificate.target = out.vector;
  if (!certificate_reproduces(blown, out.certificate.coefficients, out.vector))
    throw std::logic_error("lifted certificate does not reproduce the lifted vector");
  out.coincides_with_row = is_row(blown, out.vector);
  return out;
}

/// Lifts a witness for g to g multiplied by m, using the block-contiguous
/// layout of multiply_vertices.
inline LiftedVector lift_witness(const Graph& g, const MultiplicityVector& m, const Witness& w) {
  if (m.size() != g.order() || w.vector.size() != g.order())
    throw std::invalid_argument("witness, multiplicity vector and graph disagree in size");
  const Graph blown = multiply_vertices(g, m);
  const auto class_of = m.block_of();
  const auto first = m.block_offsets();
  return lift_along(blown, class_of, first, w);
}

struct CatalogEntry {
  std::string_view name;
  const std::vector<std::vector<int>>& (*matrix)();
  std::vector<Rational> coefficients;
  BitVector vector;
};

inline const std::vector<CatalogEntry>& rank5_catalog() {
  auto R = [](long p, long q = 1) { return fraction(p, q); };
  static const std::vector<CatalogEntry> entries{
      {"D6", families::d6_matrix, {R(0), R(-1, 2), R(1, 2), R(1), R(0), R(1, 2), R(0)}, {0, 1, 1, 1, 1, 1, 1}},
      {"D14", families::d14_matrix, {R(1, 2), R(-1, 2), R(0), R(0), R(1, 2), R(1)}, {1, 1, 1, 1, 1, 1}},
      {"D15", families::d15_matrix, {R(0), R(0), R(0), R(1, 2), R(1, 2), R(1, 2)}, {1, 1, 1, 1, 1, 1}},
      {"D17", families::d17_matrix, {R(-1, 2), R(1, 2), R(1), R(0), R(1, 2), R(0), R(0)}, {1, 1, 1, 1, 1, 1, 1}},
  };
  return entries;
}

/// Label-exact lookup of the stored rank-5 matrices.
inline StrategyOutcome witness_catalog_rank5(const Graph& g) {
  for (const auto& e : rank5_catalog()) {
    const auto& m = e.matrix();
    if (m.size() != g.order()) continue;
    if (!(Graph::from_matrix(m) == g)) continue;
    Witness w{e.vector, {e.coefficients, e.vector}, Strategy::catalog_rank5};
    return detail::checked(g, std::move(w));
  }
  return StrategyOutcome::inapplicable("adjacency matrix is not in the rank-5 catalog");
}

inline constexpr std::size_t kDefaultOracleLimit = 16;

/// Default oracle bound, overridable through ROWSPACE_ORACLE_LIMIT.
inline std::size_t default_oracle_limit() {
  if (const char* env = std::getenv("ROWSPACE_ORACLE_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("ROWSPACE_ORACLE_LIMIT is not a number: ") + env);
    }
  }
  return kDefaultOracleLimit;
}

struct SearchOptions {
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::vector<Strategy> enabled{kAllStrategies.begin(), kAllStrategies.end()};

  bool allows(Strategy s) const { return std::find(enabled.begin(), enabled.end(), s) != enabled.end(); }
};

}  // namespace rowspace
