#ifndef HAMSPEC_GRAPH6_HPP
#define HAMSPEC_GRAPH6_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

class graph6_error : public std::runtime_error {
public:
  graph6_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at byte " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

inline constexpr std::uint64_t graph6_max_order = 68719476735ull;

// graph6: N(n) header, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// (column by column) packed big-endian into 6-bit groups, each offset by 63.
inline std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put_bits = [&out](std::uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    put_bits(n, 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    put_bits(n, 6);
  }

  int filled = 0;
  unsigned acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph decode_graph6(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  if (s.substr(0, header.size()) == header) pos = header.size();

  auto value_at = [&](std::size_t i) -> unsigned {
    if (i >= s.size()) throw graph6_error("truncated graph6 record", i);
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw graph6_error("character out of graph6 range", i);
    return c - 63u;
  };

  std::uint64_t n = 0;
  if (pos >= s.size()) throw graph6_error("empty graph6 record", pos);
  if (s[pos] != '~') {
    n = value_at(pos++);
  } else if (pos + 1 < s.size() && s[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | value_at(pos++);
    if (n <= 258047) throw graph6_error("non-canonical 8-byte size header", pos - 8);
  } else {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | value_at(pos++);
    if (n <= 62) throw graph6_error("non-canonical 4-byte size header", pos - 4);
  }

  // n(n-1)/2 <= 6 * remaining bytes; checked before the product can overflow.
  const std::uint64_t remaining = s.size() - pos;
  if (n > 2 && (n - 1) / 2 > (6 * remaining) / (n - 2) + 1)
    throw graph6_error("truncated graph6 adjacency section", s.size());
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (s.size() - pos < groups) throw graph6_error("truncated graph6 adjacency section", s.size());
  if (s.size() - pos > groups) throw graph6_error("trailing bytes after graph6 record", pos + groups);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const unsigned group = value_at(pos + bit / 6);
      if ((group >> (5 - bit % 6)) & 1u) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const unsigned last = value_at(pos + groups - 1);
    const unsigned pad_mask = (1u << (6 - bits % 6)) - 1u;
    if (last & pad_mask) throw graph6_error("nonzero padding bits", pos + groups - 1);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace hamspec

#endif  // HAMSPEC_GRAPH6_HPP
