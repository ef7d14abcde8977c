#ifndef ADIM_GRAPH6_HPP
#define ADIM_GRAPH6_HPP

#include <string>

#include "adim/graph.hpp"

namespace adim {

// Standard graph6 text: one byte n+63 (n <= 62 always holds here), then the
// upper-triangle bits in column-major order x(0,1), x(0,2), x(1,2), x(0,3),
// ... packed 6 per byte MSB first, each byte offset by 63, last byte
// zero-padded. decode(encode(g)) == g.
std::string graph6_encode(const Graph& g);

// Throws MalformedGraph6 on bad length, byte out of range or nonzero
// padding; OrderOutOfRange when the encoded order exceeds kMaxOrder.
Graph graph6_decode(const std::string& text);

}  // namespace adim

#endif  // ADIM_GRAPH6_HPP
