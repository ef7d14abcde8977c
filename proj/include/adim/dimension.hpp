#ifndef ADIM_DIMENSION_HPP
#define ADIM_DIMENSION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "adim/graph.hpp"

namespace adim {

// min(2, d(v,w)): 0 iff v == w, 1 iff adjacent, 2 otherwise (unreachable
// pairs included).
int truncated_adjacency(const Graph& g, int v, int w);

// Truncated-distance vector of one vertex against an ordered landmark list.
// At most one entry can be 0 (the vertex's own landmark slot).
struct AdjacencyRepresentation {
  std::vector<std::uint8_t> entries;  // each 0, 1 or 2
  // 2 bits per entry, entry i at bits 2i..2i+1; one word covers any
  // landmark list on a 32-vertex graph
  std::uint64_t packed() const;
  bool operator==(const AdjacencyRepresentation&) const = default;
};

AdjacencyRepresentation adjacency_representation(const Graph& g, int v,
                                                 std::span<const int> landmarks);

// True iff all vertices outside the witness set have pairwise distinct
// representations (vertices inside are always separated by their 0 entry).
bool is_adjacency_resolving(const Graph& g, std::span<const int> witness);

// Exact-distance analogues, defined on connected graphs only.
std::vector<int> metric_representation(const Graph& g, int v,
                                       std::span<const int> landmarks);
bool is_metric_resolving(const Graph& g, std::span<const int> witness);

// Least positive k with k + 2^k >= n. Every adjacency resolving set of an
// order-n graph has at least this many vertices.
int lower_bound_population(int n);

// Sum of (class size - 1) over twin classes; a resolving set misses at most
// one vertex of each class.
int lower_bound_twins(const Graph& g);

// n - D - 1 + floor((2D+4)/5) for a connected graph of diameter D.
int upper_bound_diameter(const Graph& g);

// Witness for the diameter bound: all vertices off one diametral shortest
// path plus an adjacency basis of that path. Always adjacency-resolving,
// with cardinality <= upper_bound_diameter(g).
std::vector<int> resolving_set_from_diametral_path(const Graph& g);

// floor((2n+2)/5); the adjacency dimension of P_n and C_n for n >= 4.
int path_cycle_dimension_formula(int n);

enum class SolveMode { pruned, naive };
enum class InvariantKind { adjacency, metric };

struct SearchStats {
  std::uint64_t sets_tested = 0;
  int lower_bound_start = 1;  // first cardinality searched
  int upper_bound_cap = -1;   // last cardinality the search would try
  int lb_population = -1;
  int lb_twins = -1;
  int ub_diameter = -1;  // -1 when the graph is disconnected
};

// An exact dimension with a certificate: basis is a resolving set of the
// stated kind and size, and exhausted search (or a proven bound, in pruned
// mode) rules out every smaller cardinality.
struct DimensionResult {
  int value = 0;
  std::vector<int> basis;  // lexicographically least minimum basis
  InvariantKind kind = InvariantKind::adjacency;
  SearchStats stats;
};

// Exact adjacency dimension. Pruned mode starts at the best lower bound and
// is capped by the diameter bound; naive mode scans every cardinality from 1
// and serves as the independent oracle. dim2 of the one-vertex graph is 1
// with basis {0}.
DimensionResult adjacency_dimension(const Graph& g,
                                    SolveMode mode = SolveMode::pruned);

// Exact metric dimension of a connected graph of order >= 2.
DimensionResult metric_dimension(const Graph& g);

}  // namespace adim

#endif  // ADIM_DIMENSION_HPP
