#ifndef ADIM_GRAPH_HPP
#define ADIM_GRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "adim/errors.hpp"

namespace adim {

inline constexpr int kMaxOrder = 32;

// Simple undirected graph on at most 32 vertices. Row v is a bitmask with
// bit w set iff vw is an edge. Rows stay symmetric, loop-free and zero at
// positions >= order. Instances are cheap values; every operation on them
// is a pure function, so graphs can be shared freely across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // edgeless graph on n vertices

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int v, int w) const { return (rows_[v] >> w) & 1u; }
  std::uint32_t neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;
  std::uint32_t vertex_mask() const;  // low order() bits set

  void add_edge(int v, int w);

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxOrder> rows_{};
};

using Edge = std::pair<int, int>;

// Builds the graph with exactly the given edges, symmetrized; duplicate
// pairs collapse. Throws OrderOutOfRange / InvalidEdge.
Graph from_edges(int n, std::span<const Edge> edges);
Graph from_edges(int n, std::initializer_list<Edge> edges);

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);           // all cross edges added
Graph disjoint_union(const Graph& g, const Graph& h);

// perm[old] = new; perm must be a permutation of 0..order-1.
Graph relabel(const Graph& g, std::span<const int> perm);

inline constexpr int kUnreachable = -1;

struct DistanceVector {
  int source = 0;
  std::vector<int> distances;  // kUnreachable where no path exists
};

DistanceVector bfs_distances(const Graph& g, int source);

// distances[v][w]; kUnreachable across components
std::vector<std::vector<int>> distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

// nullopt for disconnected graphs; diameter of a one-vertex graph is 0.
// Throws EmptyGraph on order 0.
std::optional<int> diameter(const Graph& g);

// u, v are twins when N(u)\{v} = N(v)\{u}. A vertex cannot have both an
// adjacent and a non-adjacent twin, so the relation is an equivalence and
// the maximal classes partition V. Classes are listed by smallest member,
// members ascending.
struct TwinPartition {
  std::vector<std::vector<int>> classes;
};

bool are_twins(const Graph& g, int u, int v);
TwinPartition twin_partition(const Graph& g);

}  // namespace adim

#endif  // ADIM_GRAPH_HPP
