#pragma once

// graph6 text encoding: N(n) followed by the upper triangle of the adjacency
// matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// most significant bit first, each byte offset by 63. N(n) is one byte n+63
// for n <= 62 and '~' plus three 6-bit bytes for 63 <= n <= 258047.

#include <cstddef>
#include <string>
#include <string_view>

#include "tstar/errors.hpp"
#include "tstar/graph.hpp"

namespace tstar {

inline std::string graph6_encode(const graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// Accepts an optional ">>graph6<<" header and one trailing newline.
inline graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) throw parse_error("graph6: unexpected end of input", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw parse_error("graph6: byte outside [63, 126]", at);
    return c - 63;
  };

  if (pos >= text.size()) throw parse_error("graph6: empty input", pos);
  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') throw parse_error("graph6: orders above 258047 unsupported", pos);
    n = (static_cast<long>(sextet(pos + 1)) << 12) | (sextet(pos + 2) << 6) | sextet(pos + 3);
    if (n < 63) throw parse_error("graph6: long header used for order below 63", pos);
    pos += 4;
  } else {
    n = sextet(pos);
    pos += 1;
  }
  if (n > graph::max_order)
    throw parse_error("graph6: order " + std::to_string(n) + " exceeds the 64-vertex limit", 0);

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < expected) throw parse_error("graph6: truncated adjacency data", text.size());
  if (text.size() > expected) throw parse_error("graph6: trailing bytes", expected);

  graph g(static_cast<int>(n));
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((sextet(at) >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(last) & pad_mask) throw parse_error("graph6: nonzero padding bits", last);
  }
  return g;
}

}  // namespace tstar
