#ifndef ADIM_CANONICAL_HPP
#define ADIM_CANONICAL_HPP

#include <string>

#include "adim/graph.hpp"

namespace adim {

// Guard for the exhaustive relabeling search below.
inline constexpr int kMaxCanonicalOrder = 10;

// Isomorphism-invariant normal form: the lexicographically smallest
// upper-triangle bit string over all vertex relabelings, returned in graph6
// encoding so canonical forms sort like graph6 text. Equal strings iff the
// graphs are isomorphic. Throws OrderOutOfRange above kMaxCanonicalOrder.
std::string canonical_form(const Graph& g);

// The relabeling of g that attains canonical_form(g).
Graph canonical_graph(const Graph& g);

}  // namespace adim

#endif  // ADIM_CANONICAL_HPP
