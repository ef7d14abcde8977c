#include "adim/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>

#include "adim/graph6.hpp"

namespace adim {

namespace {

// Depth-first search for the relabeling with the smallest upper-triangle
// bit string. Positions fill left to right; placing position k appends
// column k (bits x(0,k)..x(k-1,k), x(0,k) most significant), so prefixes can
// be compared column by column against the best complete string seen so far.
// Unused vertices in the same twin class lead to identical subtrees (their
// transposition is an automorphism), so only one per class is branched on.
struct CanonSearch {
  const Graph* g = nullptr;
  int n = 0;
  std::array<int, kMaxOrder> twin_class{};
  std::array<int, kMaxOrder> placed{};
  std::array<std::uint32_t, kMaxOrder> cols{};
  std::array<int, kMaxOrder> best_perm{};
  std::array<std::uint32_t, kMaxOrder> best_cols{};
  bool have_best = false;

  // compares columns 1..depth against the best string: -1 smaller, 0, +1
  int compare_prefix(int depth) const {
    for (int k = 1; k <= depth; ++k)
      if (cols[k] != best_cols[k]) return cols[k] < best_cols[k] ? -1 : 1;
    return 0;
  }

  void descend(int depth, std::uint32_t used) {
    if (depth == n) {
      if (!have_best || compare_prefix(n - 1) < 0) {
        best_cols = cols;
        std::copy(placed.begin(), placed.begin() + n, best_perm.begin());
        have_best = true;
      }
      return;
    }
    struct Cand {
      std::uint32_t col;
      int v;
    };
    std::array<Cand, kMaxOrder> cand;
    int num = 0;
    std::uint32_t classes_seen = 0;
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      if (classes_seen & (1u << twin_class[v])) continue;
      classes_seen |= 1u << twin_class[v];
      std::uint32_t col = 0;
      for (int i = 0; i < depth; ++i)
        col = (col << 1) | (g->adjacent(placed[i], v) ? 1u : 0u);
      cand[num++] = {col, v};
    }
    std::sort(cand.begin(), cand.begin() + num,
              [](const Cand& a, const Cand& b) {
                return a.col != b.col ? a.col < b.col : a.v < b.v;
              });
    for (int i = 0; i < num; ++i) {
      cols[depth] = cand[i].col;
      placed[depth] = cand[i].v;
      // candidates are sorted by column, so once one prefix exceeds the
      // best string every later sibling does as well
      if (have_best && compare_prefix(depth) > 0) break;
      descend(depth + 1, used | (1u << cand[i].v));
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw OrderOutOfRange("canonical form guarded to order <= " +
                          std::to_string(kMaxCanonicalOrder));
  if (n <= 1) return g;

  CanonSearch s;
  s.g = &g;
  s.n = n;
  const TwinPartition twins = twin_partition(g);
  for (std::size_t c = 0; c < twins.classes.size(); ++c)
    for (int v : twins.classes[c]) s.twin_class[v] = static_cast<int>(c);
  s.descend(0, 0);

  std::array<int, kMaxOrder> perm{};  // old vertex -> new position
  for (int k = 0; k < n; ++k) perm[s.best_perm[k]] = k;
  return relabel(g, std::span<const int>(perm.data(), static_cast<std::size_t>(n)));
}

std::string canonical_form(const Graph& g) {
  return graph6_encode(canonical_graph(g));
}

}  // namespace adim
