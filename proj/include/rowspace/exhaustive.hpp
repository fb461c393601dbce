#pragma once

// Exhaustive desk-scale check over every labeled graph on n vertices: each
// connected graph with an edge must yield a verified witness. The same pass
// also checks the 2n-5 size bound on diameter-2 graphs without a dominating
// vertex.

#include "rowspace/dispatch.hpp"
#include "rowspace/graph.hpp"
#include "rowspace/graph6.hpp"
#include "rowspace/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace rowspace {

inline constexpr std::size_t kExhaustiveMaxOrder = 7;

/// Size of a diameter-2 graph without a dominating vertex against 2n-5.
struct SizeBoundCheck {
  bool applicable = false;  // diameter 2 and no dominating vertex
  bool meets_bound = true;
  bool equality = false;
  std::int64_t bound = 0;
};

inline SizeBoundCheck check_size_bound(const Graph& g) {
  SizeBoundCheck c;
  const auto n = static_cast<std::int64_t>(g.order());
  const auto s = static_cast<std::int64_t>(g.size());
  c.bound = 2 * n - 5;
  bool dominating = false;
  for (Vertex v = 0; v < g.order() && !dominating; ++v) dominating = is_dominating(g, v);
  c.applicable = !dominating && diameter(g) == 2;
  c.meets_bound = s >= c.bound;
  c.equality = c.applicable && s == c.bound;
  return c;
}

/// Labeled graph whose edge set is given by the bits of code, bit k standing
/// for the k-th pair of the column-major upper triangle (the graph6 order).
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Bitset> rows(n, Bitset(n));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1U) {
        rows[i].set(j);
        rows[j].set(i);
      }
  return Graph::from_rows(std::move(rows));
}

struct ExhaustiveOptions {
  std::size_t jobs = 1;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

struct ExhaustiveReport {
  std::size_t n = 0;
  std::uint64_t labeled_graphs_scanned = 0;
  std::uint64_t graphs_checked = 0;
  std::vector<std::string> failures;  // graph6 of graphs with no witness
  std::map<std::string, std::uint64_t> strategy_histogram;
  std::uint64_t size_bound_checked = 0;
  std::uint64_t size_bound_equalities = 0;
  std::vector<std::string> size_bound_violations;
  std::chrono::milliseconds elapsed{0};

  void merge(const ExhaustiveReport& o) {
    labeled_graphs_scanned += o.labeled_graphs_scanned;
    graphs_checked += o.graphs_checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    for (const auto& [k, v] : o.strategy_histogram) strategy_histogram[k] += v;
    size_bound_checked += o.size_bound_checked;
    size_bound_equalities += o.size_bound_equalities;
    size_bound_violations.insert(size_bound_violations.end(), o.size_bound_violations.begin(),
                                 o.size_bound_violations.end());
  }
};

namespace detail {

inline void exhaustive_range(std::size_t n, std::uint64_t begin, std::uint64_t end, const SearchOptions& search,
                             ExhaustiveReport& out) {
  for (std::uint64_t code = begin; code < end; ++code) {
    ++out.labeled_graphs_scanned;
    if (code == 0) continue;
    const Graph g = graph_from_code(n, code);
    if (!is_connected(g)) continue;
    ++out.graphs_checked;
    const WitnessSearch found = find_witness(g, search);
    if (found.witness && verify_witness(g, *found.witness))
      ++out.strategy_histogram[std::string(strategy_name(found.witness->strategy))];
    else
      out.failures.push_back(write_graph6(g));
    const SizeBoundCheck sb = check_size_bound(g);
    if (sb.applicable) {
      ++out.size_bound_checked;
      if (sb.equality) ++out.size_bound_equalities;
      if (!sb.meets_bound) out.size_bound_violations.push_back(write_graph6(g));
    }
  }
}

}  // namespace detail

/// Scans all 2^(n(n-1)/2) labeled graphs on n vertices. Workers take
/// contiguous chunks of the code range; chunk reports merge in order, so
/// failure lists are deterministic.
inline ExhaustiveReport exhaustive_verify(std::size_t n, const ExhaustiveOptions& options = {}) {
  if (n < 1 || n > kExhaustiveMaxOrder)
    throw CapacityError("built-in generator supports 1 <= n <= " + std::to_string(kExhaustiveMaxOrder) +
                        ", got n = " + std::to_string(n) + "; feed graph6 input instead");
  const auto start = std::chrono::steady_clock::now();
  SearchOptions search;
  search.oracle_limit = options.oracle_limit;

  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 4096));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<ExhaustiveReport> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++)
      detail::exhaustive_range(n, c * chunk, std::min(total, (c + 1) * chunk), search, parts[c]);
  };
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  ExhaustiveReport report;
  report.n = n;
  for (const auto& p : parts) report.merge(p);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace rowspace
