#include "eigmult/graph6.hpp"

#include "eigmult/errors.hpp"

namespace eigmult {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (pos >= text.size()) throw ParseError("graph6: missing order byte", pos);
  const auto order_byte = static_cast<unsigned char>(text[pos]);
  if (order_byte < 63 || order_byte > 126) throw ParseError("graph6: byte outside 63..126", pos);
  if (order_byte == 126) throw ParseError("graph6: extended order (n > 62) unsupported", pos);
  const int n = order_byte - 63;
  const std::size_t body = pos + 1;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - body != groups) {
    throw ParseError("graph6: expected " + std::to_string(groups) + " data bytes for n=" + std::to_string(n) +
                         ", found " + std::to_string(text.size() - body),
                     text.size() - body < groups ? text.size() : body + groups);
  }

  std::vector<Mask> rows(n, 0);
  std::size_t k = 0;
  int i = 0, j = 1;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t offset = body + g;
    const auto byte = static_cast<unsigned char>(text[offset]);
    if (byte < 63 || byte > 126) throw ParseError("graph6: byte outside 63..126", offset);
    const int value = byte - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bit", offset);
        continue;
      }
      if (set) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw DomainError("graph6: unsupported size n=" + std::to_string(n) + " (max " +
                      std::to_string(kMaxGraph6Order) + ")");
  }
  std::string out(1, static_cast<char>(n + 63));
  int value = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

}  // namespace eigmult
