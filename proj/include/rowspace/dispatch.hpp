#pragma once

// Strategy dispatch: the structural constructions first, then twin
// contraction with lifting, then the brute-force oracle for small graphs.

#include "rowspace/graph.hpp"
#include "rowspace/oracle.hpp"
#include "rowspace/witness.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace rowspace {

struct WitnessSearch {
  std::optional<Witness> witness;
  std::string reason;
};

inline WitnessSearch find_witness(const Graph& g, const SearchOptions& options);

namespace detail {

inline WitnessSearch find_connected(const Graph& g, const SearchOptions& opts) {
  using Fn = StrategyOutcome (*)(const Graph&);
  const std::array<std::pair<Strategy, Fn>, 5> structural{{
      {Strategy::complete_all_ones, witness_complete},
      {Strategy::disjoint_neighborhood, witness_disjoint_nbhd},
      {Strategy::diam_ge4_path, witness_diam_ge4},
      {Strategy::dominating_regular, witness_dominating_regular},
      {Strategy::catalog_rank5, witness_catalog_rank5},
  }};
  std::string notes;
  auto note = [&notes](Strategy s, const std::string& what) {
    if (!notes.empty()) notes += "; ";
    notes += std::string(strategy_name(s)) + ": " + what;
  };

  for (const auto& [s, fn] : structural) {
    if (!opts.allows(s)) continue;
    StrategyOutcome out = fn(g);
    if (out.witness) return {std::move(out.witness), {}};
    if (out.applicable) note(s, out.reason);
  }

  if (opts.allows(Strategy::lifted) && !is_reduced(g)) {
    const TwinQuotient q = contract_twins(g);
    WitnessSearch inner = find_witness(q.reduced, opts);
    if (inner.witness) {
      const LiftedVector lifted = lift_along(g, q.class_of, q.representative, *inner.witness);
      if (auto w = lifted.witness()) return {std::move(w), {}};
      note(Strategy::lifted, "lifted vector coincides with row " + std::to_string(*lifted.coincides_with_row));
    } else {
      note(Strategy::lifted, "twin-reduced graph has no witness (" + inner.reason + ")");
    }
  }

  if (opts.allows(Strategy::oracle)) {
    if (g.order() > opts.oracle_limit || g.order() > kOracleHardLimit) {
      note(Strategy::oracle, "order " + std::to_string(g.order()) + " exceeds oracle limit " +
                                 std::to_string(opts.oracle_limit));
    } else {
      OracleResult r = brute_force_witness(g, opts.oracle_limit);
      if (r.witness) return {std::move(r.witness), {}};
      note(Strategy::oracle, "exhaustive search found no witness");
    }
  }
  return {std::nullopt, notes.empty() ? "no enabled strategy applies" : notes};
}

}  // namespace detail

/// Disconnected graphs are handled on the first component that contains an
/// edge; the component witness is padded with zeros elsewhere.
inline WitnessSearch find_witness(const Graph& g, const SearchOptions& options) {
  if (g.size() == 0) throw std::invalid_argument("graph has no edges");
  if (is_connected(g)) return detail::find_connected(g, options);

  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    WitnessSearch inner = detail::find_connected(induced_subgraph(g, comp), options);
    if (!inner.witness) return inner;
    const std::size_t n = g.order();
    Witness w{BitVector(n, 0), {std::vector<Rational>(n), {}}, inner.witness->strategy};
    for (std::size_t k = 0; k < comp.size(); ++k) {
      w.vector[comp[k]] = inner.witness->vector[k];
      w.certificate.coefficients[comp[k]] = inner.witness->certificate.coefficients[k];
    }
    w.certificate.target = w.vector;
    if (!verify_witness(g, w)) throw std::logic_error("padded component witness failed verification");
    return {std::move(w), {}};
  }
  throw std::logic_error("graph with an edge has no component of size >= 2");
}

inline WitnessSearch find_witness(const Graph& g, std::size_t oracle_limit = kDefaultOracleLimit) {
  SearchOptions opts;
  opts.oracle_limit = oracle_limit;
  return find_witness(g, opts);
}

}  // namespace rowspace
