#include "adim/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>
#include <utility>

#include "adim/canonical.hpp"
#include "adim/graph6.hpp"
#include "adim/parallel.hpp"

namespace adim {

namespace {

Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(v, w);
  return g;
}

}  // namespace

std::vector<Graph> detail::enumerate_graphs_uncached(int n, bool connected_only,
                                                     int workers) {
  if (n < 1 || n > kMaxEnumOrder)
    throw OrderOutOfRange("non-isomorphic enumeration guarded to order 1.." +
                          std::to_string(kMaxEnumOrder));

  const std::uint64_t total = 1ull << (n * (n - 1) / 2);
  workers = detail::resolve_workers(workers);

  std::vector<std::unordered_set<std::string>> locals(
      static_cast<std::size_t>(workers));
  detail::parallel_chunks(total, workers,
                          [&](int worker, std::uint64_t begin, std::uint64_t end) {
                            auto& seen = locals[worker];
                            for (std::uint64_t mask = begin; mask < end; ++mask) {
                              Graph g = graph_from_mask(n, static_cast<std::uint32_t>(mask));
                              if (connected_only && !is_connected(g)) continue;
                              seen.insert(canonical_form(g));
                            }
                          });

  std::unordered_set<std::string> merged;
  for (auto& s : locals) merged.merge(s);
  std::vector<std::string> forms(merged.begin(), merged.end());
  std::sort(forms.begin(), forms.end());

  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(graph6_decode(f));
  return out;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int workers) {
  // Memoized: enumeration is deterministic, so the cache is invisible apart
  // from the speedup when several verifiers scan the same universe.
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, connected_only});
    if (it != cache.end()) return it->second;
  }
  auto result = detail::enumerate_graphs_uncached(n, connected_only, workers);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, connected_only), std::move(result))
      .first->second;
}

std::vector<Graph> enumerate_labeled_graphs(int n) {
  if (n < 1 || n > kMaxLabeledEnumOrder)
    throw OrderOutOfRange("labeled enumeration guarded to order 1.." +
                          std::to_string(kMaxLabeledEnumOrder));
  const std::uint64_t total = 1ull << (n * (n - 1) / 2);
  std::vector<Graph> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    out.push_back(graph_from_mask(n, static_cast<std::uint32_t>(mask)));
  return out;
}

}  // namespace adim
