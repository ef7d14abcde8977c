#include "adim/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace adim {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder)
    throw OrderOutOfRange("graph order " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxOrder));
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw VertexOutOfRange("vertex " + std::to_string(v) +
                           " outside 0.." + std::to_string(g.order() - 1));
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(rows_[v]);
  return total / 2;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

std::uint32_t Graph::vertex_mask() const {
  return n_ == kMaxOrder ? ~0u : (1u << n_) - 1u;
}

void Graph::add_edge(int v, int w) {
  if (v < 0 || v >= n_ || w < 0 || w >= n_ || v == w)
    throw InvalidEdge("bad edge (" + std::to_string(v) + "," +
                      std::to_string(w) + ") in graph of order " +
                      std::to_string(n_));
  rows_[v] |= 1u << w;
  rows_[w] |= 1u << v;
}

Graph from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [v, w] : edges) g.add_edge(v, w);
  return g;
}

Graph from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (!g.adjacent(v, w)) c.add_edge(v, w);
  return c;
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  check_order(ng + nh);
  Graph j = disjoint_union(g, h);
  for (int v = 0; v < ng; ++v)
    for (int w = 0; w < nh; ++w) j.add_edge(v, ng + w);
  return j;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  check_order(ng + nh);
  Graph u(ng + nh);
  for (int v = 0; v < ng; ++v)
    for (int w = v + 1; w < ng; ++w)
      if (g.adjacent(v, w)) u.add_edge(v, w);
  for (int v = 0; v < nh; ++v)
    for (int w = v + 1; w < nh; ++w)
      if (h.adjacent(v, w)) u.add_edge(ng + v, ng + w);
  return u;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw InvalidParameters("relabel permutation size mismatch");
  std::uint32_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen & (1u << v)))
      throw InvalidParameters("relabel argument is not a permutation");
    seen |= 1u << v;
  }
  Graph r(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (g.adjacent(v, w)) r.add_edge(perm[v], perm[w]);
  return r;
}

DistanceVector bfs_distances(const Graph& g, int source) {
  check_vertex(g, source);
  const int n = g.order();
  DistanceVector out;
  out.source = source;
  out.distances.assign(n, kUnreachable);
  out.distances[source] = 0;

  std::uint32_t visited = 1u << source;
  std::uint32_t frontier = visited;
  int d = 0;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m != 0; m &= m - 1)
      next |= g.neighbors(std::countr_zero(m));
    next &= ~visited & g.vertex_mask();
    ++d;
    for (std::uint32_t m = next; m != 0; m &= m - 1)
      out.distances[std::countr_zero(m)] = d;
    visited |= next;
    frontier = next;
  }
  return out;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dm(n);
  for (int v = 0; v < n; ++v) dm[v] = bfs_distances(g, v).distances;
  return dm;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  const auto d = bfs_distances(g, 0).distances;
  return std::none_of(d.begin(), d.end(),
                      [](int x) { return x == kUnreachable; });
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw EmptyGraph("diameter of the order-0 graph is undefined");
  int best = 0;
  for (int v = 0; v < n; ++v) {
    const auto d = bfs_distances(g, v).distances;
    for (int w = 0; w < n; ++w) {
      if (d[w] == kUnreachable) return std::nullopt;
      best = std::max(best, d[w]);
    }
  }
  return best;
}

bool are_twins(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return false;
  return (g.neighbors(u) & ~(1u << v)) == (g.neighbors(v) & ~(1u << u));
}

TwinPartition twin_partition(const Graph& g) {
  const int n = g.order();
  TwinPartition part;
  std::uint32_t assigned = 0;
  for (int v = 0; v < n; ++v) {
    if (assigned & (1u << v)) continue;
    std::vector<int> cls{v};
    assigned |= 1u << v;
    for (int w = v + 1; w < n; ++w) {
      if (assigned & (1u << w)) continue;
      if (are_twins(g, v, w)) {
        cls.push_back(w);
        assigned |= 1u << w;
      }
    }
    part.classes.push_back(std::move(cls));
  }
  return part;
}

}  // namespace adim
