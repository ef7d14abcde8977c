#ifndef ADIM_TEST_ORACLES_HPP
#define ADIM_TEST_ORACLES_HPP

// Test-side oracles, deliberately independent of the library's canonical
// form and enumeration machinery: straight permutation search and pairwise
// isomorphism dedup over all labeled graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "adim/graph.hpp"

namespace adim_test {

inline bool iso_bruteforce(const adim::Graph& a, const adim::Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int w = v + 1; w < n && ok; ++w)
        if (a.adjacent(v, w) != b.adjacent(perm[v], perm[w])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<int> sorted_degrees(const adim::Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Labeled enumeration plus pairwise-iso dedup, one representative per class.
inline std::vector<adim::Graph> classes_bruteforce(int n,
                                                   bool connected_only = false) {
  std::vector<adim::Graph> reps;
  std::vector<std::vector<int>> rep_degrees;
  const std::uint64_t total = 1ull << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    adim::Graph g(n);
    int bit = 0;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w, ++bit)
        if ((mask >> bit) & 1) g.add_edge(v, w);
    if (connected_only && !adim::is_connected(g)) continue;
    const auto degs = sorted_degrees(g);
    bool known = false;
    for (std::size_t i = 0; i < reps.size() && !known; ++i)
      if (rep_degrees[i] == degs && iso_bruteforce(g, reps[i])) known = true;
    if (!known) {
      reps.push_back(g);
      rep_degrees.push_back(degs);
    }
  }
  return reps;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline adim::Graph random_graph(int n, double p, std::mt19937& rng) {
  adim::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (coin(rng)) g.add_edge(v, w);
  return g;
}

}  // namespace adim_test

#endif  // ADIM_TEST_ORACLES_HPP
