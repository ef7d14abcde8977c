#include "adim/graph6.hpp"

#include <string>

namespace adim {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));

  int group = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw MalformedGraph6("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126)
      throw MalformedGraph6("graph6 byte out of range 63..126");

  const int n = text[0] - 63;
  if (n == 63)
    throw MalformedGraph6("multi-byte graph6 orders are not supported");
  if (n > kMaxOrder)
    throw OrderOutOfRange("graph6 order " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxOrder));

  const int pair_bits = n * (n - 1) / 2;
  const int payload = (pair_bits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + payload)
    throw MalformedGraph6("graph6 payload length mismatch");

  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // zero padding is part of the format
  for (int b = pair_bits; b < 6 * payload; ++b) {
    const int byte = text[1 + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1)
      throw MalformedGraph6("nonzero padding bits in graph6 string");
  }
  return g;
}

}  // namespace adim
