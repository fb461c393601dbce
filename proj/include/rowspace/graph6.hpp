#pragma once

// graph6 reader/writer. Each byte carries six bits plus 63. The header
// encodes n (one byte for n <= 62, '~' + 3 bytes up to 258047, '~~' + 6 bytes
// beyond); the body is the upper triangle in column-major order
// x(0,1) x(0,2) x(1,2) x(0,3) ..., big-endian within each byte, zero padded.

#include "rowspace/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rowspace::graph6 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view kHeader = ">>graph6<<";
inline constexpr std::uint64_t kMaxOrder = 68719476735ULL;

namespace detail {

inline int sixbits(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside the printable range 63..126", pos);
  return c - 63;
}

inline void put_order(std::string& out, std::uint64_t n) {
  auto emit = [&out, n](int groups) {
    for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 0x3F)));
  };
  if (n <= 62) {
    emit(1);
  } else if (n <= 258047) {
    out.push_back('~');
    emit(3);
  } else {
    out.push_back('~');
    out.push_back('~');
    emit(6);
  }
}

}  // namespace detail

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are accepted.
inline Graph parse(std::string_view line) {
  std::size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (pos >= line.size()) throw ParseError("empty graph6 string", pos);

  std::uint64_t n = 0;
  int groups = 1;
  if (line[pos] == '~') {
    ++pos;
    groups = 3;
    if (pos < line.size() && line[pos] == '~') {
      ++pos;
      groups = 6;
    }
  }
  for (int k = 0; k < groups; ++k) n = (n << 6) | static_cast<std::uint64_t>(detail::sixbits(line, pos++));
  if (n == 0) throw ParseError("graphs with zero vertices are not supported", pos - 1);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (line.size() - pos < bytes) throw ParseError("edge field is truncated", line.size());
  if (line.size() - pos > bytes) throw ParseError("trailing bytes after edge field", pos + bytes);

  std::vector<Bitset> rows(n, Bitset(n));
  std::uint64_t k = 0, i = 0, j = 1;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const std::size_t at = pos + b;
    const int v = detail::sixbits(line, at);
    for (int s = 5; s >= 0; --s, ++k) {
      const bool bit = (v >> s) & 1;
      if (k >= bits) {
        if (bit) throw ParseError("non-zero padding bit", at);
        continue;
      }
      if (bit) {
        rows[i].set(j);
        rows[j].set(i);
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

inline std::string write(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  detail::put_order(out, n);
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace rowspace::graph6

namespace rowspace {

inline Graph parse_graph6(std::string_view line) { return graph6::parse(line); }
inline std::string write_graph6(const Graph& g) { return graph6::write(g); }

}  // namespace rowspace
