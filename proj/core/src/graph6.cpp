#include <cstddef>
#include <string>

#include "bicay/errors.hpp"
#include "bicay/graph.hpp"

namespace bicay {

// Standard graph6: N(n) header, then the upper triangle in column order
// (0,1), (0,2), (1,2), (0,3), ... packed into 6-bit groups, each + 63.

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw resource_error("graph too large for this graph6 encoder");
  }
  int bit = 5;
  char cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph graph6_decode(const std::string& s) {
  auto byte = [&](std::size_t pos) -> int {
    if (pos >= s.size()) throw parse_error("graph6 string truncated", pos);
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", pos);
    return c - 63;
  };
  if (s.empty()) throw parse_error("empty graph6 string", 0);

  std::size_t header;
  long long n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw parse_error("graph6 longform vertex counts are not supported", 1);
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    header = 4;
  } else {
    n = byte(0);
    header = 1;
  }

  const long long pairs = n * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((pairs + 5) / 6);
  if (s.size() < header + payload) throw parse_error("graph6 string truncated", s.size());
  if (s.size() > header + payload)
    throw parse_error("trailing bytes after graph6 payload", header + payload);

  Graph g(static_cast<int>(n));
  long long pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      int group = byte(header + static_cast<std::size_t>(pos / 6));
      int bit = 5 - static_cast<int>(pos % 6);
      if ((group >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace bicay
