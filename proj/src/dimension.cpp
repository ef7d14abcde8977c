#include "adim/dimension.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace adim {

namespace {

// Validates a landmark list and folds it into a bitmask.
std::uint32_t landmark_mask(const Graph& g, std::span<const int> landmarks) {
  if (landmarks.empty())
    throw EmptyLandmarkSet("landmark set must be non-empty");
  std::uint32_t mask = 0;
  for (int w : landmarks) {
    if (w < 0 || w >= g.order())
      throw VertexOutOfRange("landmark " + std::to_string(w) +
                             " outside 0.." + std::to_string(g.order() - 1));
    if (mask & (1u << w))
      throw DuplicateLandmark("landmark " + std::to_string(w) + " repeated");
    mask |= 1u << w;
  }
  return mask;
}

// Packed truncated-distance word of v against the landmarks in wmask, taken
// in ascending vertex order, 2 bits per landmark. Equal words <=> equal
// adjacency representations.
std::uint64_t packed_against_mask(const Graph& g, int v, std::uint32_t wmask) {
  std::uint64_t rep = 0;
  int slot = 0;
  for (std::uint32_t m = wmask; m != 0; m &= m - 1, ++slot) {
    const int w = std::countr_zero(m);
    const std::uint64_t a = v == w ? 0 : (g.adjacent(v, w) ? 1 : 2);
    rep |= a << (2 * slot);
  }
  return rep;
}

// Duplicate detection by sorting the packed words of the outside vertices.
bool resolves_adjacency_mask(const Graph& g, std::uint32_t wmask,
                             std::uint64_t* scratch) {
  int cnt = 0;
  for (std::uint32_t m = g.vertex_mask() & ~wmask; m != 0; m &= m - 1)
    scratch[cnt++] = packed_against_mask(g, std::countr_zero(m), wmask);
  std::sort(scratch, scratch + cnt);
  for (int i = 1; i < cnt; ++i)
    if (scratch[i] == scratch[i - 1]) return false;
  return true;
}

// Ascending-vertex-list order on subsets: the owner of the lowest vertex in
// the symmetric difference comes first.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1u))) != 0;
}

// Scans all k-subsets of 0..n-1 in colex (ascending mask) order and reports
// the lexicographically least resolving one.
template <class Resolves>
bool scan_level(int n, int k, Resolves&& resolves, std::uint64_t& tested,
                std::uint32_t& best_out) {
  bool found = false;
  std::uint32_t best = 0;
  const std::uint64_t limit = 1ull << n;
  std::uint64_t mask = (1ull << k) - 1;
  while (mask < limit) {
    ++tested;
    const auto m32 = static_cast<std::uint32_t>(mask);
    if (resolves(m32) && (!found || mask_lex_less(m32, best))) {
      found = true;
      best = m32;
    }
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  best_out = best;
  return found;
}

std::vector<int> mask_to_list(std::uint32_t mask) {
  std::vector<int> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

int truncated_adjacency(const Graph& g, int v, int w) {
  if (v < 0 || v >= g.order() || w < 0 || w >= g.order())
    throw VertexOutOfRange("truncated adjacency endpoint out of range");
  if (v == w) return 0;
  return g.adjacent(v, w) ? 1 : 2;
}

std::uint64_t AdjacencyRepresentation::packed() const {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    word |= static_cast<std::uint64_t>(entries[i]) << (2 * i);
  return word;
}

AdjacencyRepresentation adjacency_representation(const Graph& g, int v,
                                                 std::span<const int> landmarks) {
  landmark_mask(g, landmarks);  // validation only; order comes from the list
  if (v < 0 || v >= g.order())
    throw VertexOutOfRange("represented vertex out of range");
  AdjacencyRepresentation rep;
  rep.entries.reserve(landmarks.size());
  for (int w : landmarks)
    rep.entries.push_back(static_cast<std::uint8_t>(truncated_adjacency(g, v, w)));
  return rep;
}

bool is_adjacency_resolving(const Graph& g, std::span<const int> witness) {
  const std::uint32_t wmask = landmark_mask(g, witness);
  std::array<std::uint64_t, kMaxOrder> scratch;
  return resolves_adjacency_mask(g, wmask, scratch.data());
}

std::vector<int> metric_representation(const Graph& g, int v,
                                       std::span<const int> landmarks) {
  landmark_mask(g, landmarks);
  if (!is_connected(g))
    throw DisconnectedGraph("metric representation requires a connected graph");
  const auto dist = bfs_distances(g, v).distances;
  std::vector<int> rep;
  rep.reserve(landmarks.size());
  for (int w : landmarks) rep.push_back(dist[w]);
  return rep;
}

namespace {

// Distance key of one outside vertex: distances to the landmarks of wmask in
// ascending vertex order, zero-padded. Array comparison is entrywise.
using MetricKey = std::array<std::uint8_t, kMaxOrder>;

MetricKey metric_key(const std::vector<std::vector<int>>& dm, int v,
                     std::uint32_t wmask) {
  MetricKey key{};
  int slot = 0;
  for (std::uint32_t m = wmask; m != 0; m &= m - 1, ++slot)
    key[slot] = static_cast<std::uint8_t>(dm[v][std::countr_zero(m)]);
  return key;
}

bool resolves_metric_mask(const Graph& g,
                          const std::vector<std::vector<int>>& dm,
                          std::uint32_t wmask, MetricKey* scratch) {
  int cnt = 0;
  for (std::uint32_t m = g.vertex_mask() & ~wmask; m != 0; m &= m - 1)
    scratch[cnt++] = metric_key(dm, std::countr_zero(m), wmask);
  std::sort(scratch, scratch + cnt);
  for (int i = 1; i < cnt; ++i)
    if (scratch[i] == scratch[i - 1]) return false;
  return true;
}

}  // namespace

bool is_metric_resolving(const Graph& g, std::span<const int> witness) {
  const std::uint32_t wmask = landmark_mask(g, witness);
  if (!is_connected(g))
    throw DisconnectedGraph("metric resolving sets require a connected graph");
  const auto dm = distance_matrix(g);
  std::array<MetricKey, kMaxOrder> scratch;
  return resolves_metric_mask(g, dm, wmask, scratch.data());
}

int lower_bound_population(int n) {
  if (n < 1) throw InvalidParameters("order must be positive");
  int k = 1;
  while (k + (1ll << k) < n) ++k;
  return k;
}

int lower_bound_twins(const Graph& g) {
  int sum = 0;
  for (const auto& cls : twin_partition(g).classes)
    sum += static_cast<int>(cls.size()) - 1;
  return sum;
}

int upper_bound_diameter(const Graph& g) {
  if (g.order() < 2)
    throw InvalidParameters("diameter bound requires order >= 2");
  const auto d = diameter(g);
  if (!d) throw DisconnectedGraph("diameter bound requires a connected graph");
  return g.order() - *d - 1 + (2 * *d + 4) / 5;
}

int path_cycle_dimension_formula(int n) {
  if (n < 4)
    throw OrderOutOfRange("path/cycle dimension formula is stated for n >= 4");
  return (2 * n + 2) / 5;
}

DimensionResult adjacency_dimension(const Graph& g, SolveMode mode) {
  const int n = g.order();
  if (n == 0)
    throw EmptyGraph("adjacency dimension of the order-0 graph is undefined");

  DimensionResult res;
  res.kind = InvariantKind::adjacency;
  res.stats.lb_population = lower_bound_population(n);
  res.stats.lb_twins = lower_bound_twins(g);
  const bool connected = is_connected(g);
  res.stats.ub_diameter = connected && n >= 2 ? upper_bound_diameter(g) : -1;

  if (n == 1) {  // the single vertex is its own basis
    res.value = 1;
    res.basis = {0};
    res.stats.lower_bound_start = 1;
    res.stats.upper_bound_cap = 1;
    return res;
  }

  int start = 1, cap = n - 1;
  if (mode == SolveMode::pruned) {
    start = std::max({1, res.stats.lb_population, res.stats.lb_twins});
    if (res.stats.ub_diameter >= 0) cap = std::min(cap, res.stats.ub_diameter);
  }
  res.stats.lower_bound_start = start;
  res.stats.upper_bound_cap = cap;

  std::array<std::uint64_t, kMaxOrder> scratch;
  for (int k = start; k <= cap; ++k) {
    std::uint32_t best = 0;
    const bool found = scan_level(
        n, k,
        [&](std::uint32_t w) {
          return resolves_adjacency_mask(g, w, scratch.data());
        },
        res.stats.sets_tested, best);
    if (found) {
      res.value = k;
      res.basis = mask_to_list(best);
      return res;
    }
  }
  throw std::logic_error("adjacency dimension search exhausted its cap");
}

DimensionResult metric_dimension(const Graph& g) {
  const int n = g.order();
  if (n == 0)
    throw EmptyGraph("metric dimension of the order-0 graph is undefined");
  if (n == 1)
    throw InvalidParameters("metric dimension solver requires order >= 2");
  if (!is_connected(g))
    throw DisconnectedGraph("metric dimension requires a connected graph");

  DimensionResult res;
  res.kind = InvariantKind::metric;
  res.stats.lower_bound_start = 1;
  res.stats.upper_bound_cap = n - 1;

  const auto dm = distance_matrix(g);
  std::array<MetricKey, kMaxOrder> scratch;
  for (int k = 1; k <= n - 1; ++k) {
    std::uint32_t best = 0;
    const bool found = scan_level(
        n, k,
        [&](std::uint32_t w) {
          return resolves_metric_mask(g, dm, w, scratch.data());
        },
        res.stats.sets_tested, best);
    if (found) {
      res.value = k;
      res.basis = mask_to_list(best);
      return res;
    }
  }
  throw std::logic_error("metric dimension search exhausted its cap");
}

std::vector<int> resolving_set_from_diametral_path(const Graph& g) {
  const int n = g.order();
  if (n < 2)
    throw InvalidParameters("diametral-path construction requires order >= 2");
  if (!is_connected(g))
    throw DisconnectedGraph("diametral-path construction requires a connected graph");

  const auto dm = distance_matrix(g);
  int best_d = 0, du = 0, dv = 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dm[u][v] > best_d) {
        best_d = dm[u][v];
        du = u;
        dv = v;
      }

  // walk dv back to du along smallest-numbered predecessors
  const auto& dist = dm[du];
  std::vector<int> path{dv};
  int cur = dv;
  while (cur != du) {
    for (int w = 0; w < n; ++w) {
      if (g.adjacent(cur, w) && dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());

  // adjacency basis of the path as a standalone graph; the path is
  // isometric in g, so the basis separates the on-path vertices in g too
  Graph pg(static_cast<int>(path.size()));
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    pg.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
  const auto basis = adjacency_dimension(pg).basis;

  std::uint32_t wmask = g.vertex_mask();
  for (int v : path) wmask &= ~(1u << v);
  for (int idx : basis) wmask |= 1u << path[idx];
  return mask_to_list(wmask);
}

}  // namespace adim
