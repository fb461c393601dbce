#pragma once

// Exact rational linear algebra over adjacency matrices: rank by
// fraction-free elimination, row-space membership with coefficient
// certificates, and a reusable echelon basis for repeated membership queries.

#include "rowspace/graph.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rowspace {

using Rational = mpq_class;
using BitVector = std::vector<std::uint8_t>;

/// p/q in lowest terms.
inline Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q" with positive q, always including the denominator.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_fraction(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_bit_string(const BitVector& x) {
  std::string s;
  s.reserve(x.size());
  for (auto b : x) s.push_back(b ? '1' : '0');
  return s;
}

inline BitVector parse_bit_string(const std::string& s) {
  BitVector x;
  x.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string contains '" + std::string(1, c) + "'");
    x.push_back(c == '1');
  }
  return x;
}

inline void check_binary(std::span<const std::uint8_t> x) {
  for (auto b : x)
    if (b > 1) throw std::invalid_argument("vector entries must be 0 or 1");
}

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Returns a copy with x appended as an extra row.
  RationalMatrix with_row(std::span<const std::uint8_t> x) const {
    if (x.size() != cols_) throw std::invalid_argument("appended row has wrong length");
    RationalMatrix out(rows_ + 1, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    for (std::size_t j = 0; j < cols_; ++j) out(rows_, j) = x[j];
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Coefficients c with (A^T c) = target for the matrix A it was issued against.
struct MembershipCertificate {
  std::vector<Rational> coefficients;
  BitVector target;
};

inline RationalMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  RationalMatrix a(n, n);
  for (Vertex i = 0; i < n; ++i) {
    const Bitset& nb = g.neighbors(i);
    for (Vertex j = nb.find_first(); j != Bitset::npos; j = nb.find_next(j)) a(i, j) = 1;
  }
  return a;
}

/// Rank over Q. Rows are scaled to integers, then reduced with Bareiss
/// fraction-free elimination; the pivot is the first nonzero entry found
/// scanning down the column.
inline std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num() * (scale / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && at(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = at(r, col) * at(i, j) - at(i, col) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(r, col);
    ++r;
  }
  return r;
}

inline std::size_t nullity(const Graph& g) { return g.order() - rank(adjacency_matrix(g)); }

/// Exact check that (M^T c) equals x.
inline bool certifies(const RationalMatrix& m, std::span<const Rational> c, std::span<const std::uint8_t> x) {
  if (c.size() != m.rows() || x.size() != m.cols()) return false;
  Rational acc;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(c[i]) != 0 && sgn(m(i, j)) != 0) acc += c[i] * m(i, j);
    if (acc != x[j]) return false;
  }
  return true;
}

/// Solves M^T c = x by Gauss-Jordan elimination on [M^T | x]; free variables
/// are set to zero. Returns nothing if x is outside the row space of M.
inline std::optional<MembershipCertificate> solve_membership(const RationalMatrix& m, std::span<const std::uint8_t> x) {
  if (x.size() != m.cols())
    throw std::invalid_argument("target length " + std::to_string(x.size()) + " does not match column count " +
                                std::to_string(m.cols()));
  check_binary(x);
  const std::size_t eqs = m.cols(), vars = m.rows();
  // Augmented system: one equation per column of M.
  RationalMatrix aug(eqs, vars + 1);
  for (std::size_t j = 0; j < eqs; ++j) {
    for (std::size_t i = 0; i < vars; ++i) aug(j, i) = m(i, j);
    aug(j, vars) = x[j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < vars && r < eqs; ++col) {
    std::size_t p = r;
    while (p < eqs && sgn(aug(p, col)) == 0) ++p;
    if (p == eqs) continue;
    if (p != r)
      for (std::size_t k = 0; k <= vars; ++k) std::swap(aug(p, k), aug(r, k));
    const Rational inv = 1 / aug(r, col);
    for (std::size_t k = col; k <= vars; ++k) aug(r, k) *= inv;
    for (std::size_t i = 0; i < eqs; ++i) {
      if (i == r || sgn(aug(i, col)) == 0) continue;
      const Rational f = aug(i, col);
      for (std::size_t k = col; k <= vars; ++k) aug(i, k) -= f * aug(r, k);
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < eqs; ++i)
    if (sgn(aug(i, vars)) != 0) return std::nullopt;

  MembershipCertificate cert{std::vector<Rational>(vars), BitVector(x.begin(), x.end())};
  for (std::size_t k = 0; k < r; ++k) cert.coefficients[pivot_col[k]] = aug(k, vars);
  if (!certifies(m, cert.coefficients, x)) throw std::logic_error("membership certificate failed re-verification");
  return cert;
}

/// Smallest row index whose row equals x.
inline std::optional<std::size_t> is_row(const RationalMatrix& m, std::span<const std::uint8_t> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("vector length does not match column count");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool equal = true;
    for (std::size_t j = 0; j < m.cols() && equal; ++j) equal = m(i, j) == x[j];
    if (equal) return i;
  }
  return std::nullopt;
}

/// Graph-level variant of is_row that works on the bitsets directly.
inline std::optional<Vertex> is_row(const Graph& g, std::span<const std::uint8_t> x) {
  if (x.size() != g.order()) throw std::invalid_argument("vector length does not match graph order");
  Bitset target(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j]) target.set(j);
  for (Vertex i = 0; i < g.order(); ++i)
    if (g.neighbors(i) == target) return i;
  return std::nullopt;
}

/// Reduced row echelon form of M together with the transform T (RREF = T M),
/// built once and then queried for many candidate vectors.
class RowSpaceBasis {
 public:
  explicit RowSpaceBasis(const RationalMatrix& m) : source_rows_(m.rows()), cols_(m.cols()) {
    const std::size_t rows = m.rows();
    // Work on [M | I] so the transform rides along with the elimination.
    RationalMatrix w(rows, cols_ + rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) w(i, j) = m(i, j);
      w(i, cols_ + i) = 1;
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows; ++col) {
      std::size_t p = r;
      while (p < rows && sgn(w(p, col)) == 0) ++p;
      if (p == rows) continue;
      if (p != r)
        for (std::size_t k = 0; k < w.cols(); ++k) std::swap(w(p, k), w(r, k));
      const Rational inv = 1 / w(r, col);
      for (std::size_t k = 0; k < w.cols(); ++k) w(r, k) *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || sgn(w(i, col)) == 0) continue;
        const Rational f = w(i, col);
        for (std::size_t k = 0; k < w.cols(); ++k) w(i, k) -= f * w(r, k);
      }
      pivots_.push_back(col);
      ++r;
    }
    echelon_ = RationalMatrix(r, cols_);
    transform_ = RationalMatrix(r, rows);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) echelon_(i, j) = w(i, j);
      for (std::size_t k = 0; k < rows; ++k) transform_(i, k) = w(i, cols_ + k);
    }
  }

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// x lies in the row space iff it equals the combination of echelon rows
  /// weighted by its own pivot entries.
  bool contains(std::span<const std::uint8_t> x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length does not match column count");
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < pivots_.size(); ++k)
        if (x[pivots_[k]] && sgn(echelon_(k, j)) != 0) acc += echelon_(k, j);
      if (acc != x[j]) return false;
    }
    return true;
  }

  std::optional<MembershipCertificate> certificate(std::span<const std::uint8_t> x) const {
    if (!contains(x)) return std::nullopt;
    MembershipCertificate cert{std::vector<Rational>(source_rows_), BitVector(x.begin(), x.end())};
    for (std::size_t k = 0; k < pivots_.size(); ++k)
      if (x[pivots_[k]])
        for (std::size_t i = 0; i < source_rows_; ++i) cert.coefficients[i] += transform_(k, i);
    return cert;
  }

 private:
  std::size_t source_rows_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  RationalMatrix echelon_;
  RationalMatrix transform_;
};

}  // namespace rowspace
