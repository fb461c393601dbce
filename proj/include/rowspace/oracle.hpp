#pragma once

// Brute-force ground truth: scan every non-zero (0,1)-vector in ascending
// binary order (entry i is bit i of the counter) and keep those that lie in
// the row space and are not rows.

#include "rowspace/graph.hpp"
#include "rowspace/linalg.hpp"
#include "rowspace/witness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rowspace {

/// Raised when an exhaustive search is asked to go beyond its configured size.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard ceiling for a 64-bit candidate counter; the practical bound is the
/// caller's oracle limit.
inline constexpr std::size_t kOracleHardLimit = 32;

struct OracleResult {
  bool found = false;
  std::optional<Witness> witness;
  std::uint64_t candidates_checked = 0;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

inline void check_oracle_bound(const Graph& g, std::size_t bound) {
  if (g.order() > bound || g.order() > kOracleHardLimit)
    throw CapacityError("graph of order " + std::to_string(g.order()) + " exceeds oracle bound " +
                        std::to_string(std::min(bound, kOracleHardLimit)));
}

inline BitVector candidate(std::uint64_t code, std::size_t n) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((code >> i) & 1U);
  return x;
}

inline std::vector<std::uint64_t> row_codes(const Graph& g) {
  std::vector<std::uint64_t> codes;
  for (Vertex i = 0; i < g.order(); ++i) {
    std::uint64_t c = 0;
    const Bitset& nb = g.neighbors(i);
    for (Vertex j = nb.find_first(); j != Bitset::npos; j = nb.find_next(j)) c |= std::uint64_t{1} << j;
    codes.push_back(c);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace detail

/// First qualifying vector under the ascending scan. candidates_checked counts
/// membership tests; rows of A(g) are skipped without a test.
inline OracleResult brute_force_witness(const Graph& g, std::size_t bound = kDefaultOracleLimit) {
  detail::check_oracle_bound(g, bound);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.order();
  const RowSpaceBasis basis(adjacency_matrix(g));
  const auto rows = detail::row_codes(g);
  OracleResult result;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t code = 1; code < end; ++code) {
    if (std::binary_search(rows.begin(), rows.end(), code)) continue;
    ++result.candidates_checked;
    BitVector x = detail::candidate(code, n);
    if (auto cert = basis.certificate(x)) {
      Witness w{std::move(x), std::move(*cert), Strategy::oracle};
      if (!verify_witness(g, w)) throw std::logic_error("oracle witness failed verification");
      result.found = true;
      result.witness = std::move(w);
      break;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

/// Every qualifying vector, in ascending scan order.
inline std::vector<BitVector> enumerate_all_witnesses(const Graph& g, std::size_t bound = kDefaultOracleLimit) {
  detail::check_oracle_bound(g, bound);
  const std::size_t n = g.order();
  const RowSpaceBasis basis(adjacency_matrix(g));
  const auto rows = detail::row_codes(g);
  std::vector<BitVector> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t code = 1; code < end; ++code) {
    if (std::binary_search(rows.begin(), rows.end(), code)) continue;
    BitVector x = detail::candidate(code, n);
    if (basis.contains(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace rowspace
