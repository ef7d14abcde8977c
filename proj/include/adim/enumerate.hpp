#ifndef ADIM_ENUMERATE_HPP
#define ADIM_ENUMERATE_HPP

#include <vector>

#include "adim/graph.hpp"

namespace adim {

inline constexpr int kMaxEnumOrder = 7;
inline constexpr int kMaxLabeledEnumOrder = 6;

// One representative per isomorphism class of order-n graphs, sorted by
// canonical form. Filter-based: every labeled graph is canonicalized and
// deduplicated, in parallel for the larger orders. The result does not
// depend on the worker count. Representatives are canonically labeled.
// Throws OrderOutOfRange outside 1..kMaxEnumOrder.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false,
                                    int workers = 0);

// Every labeled graph on n vertices, in edge-mask order, no dedup.
// Throws OrderOutOfRange outside 1..kMaxLabeledEnumOrder.
std::vector<Graph> enumerate_labeled_graphs(int n);

namespace detail {
// Cache-free core of enumerate_graphs, exposed so determinism across worker
// counts stays testable.
std::vector<Graph> enumerate_graphs_uncached(int n, bool connected_only,
                                             int workers);
}  // namespace detail

}  // namespace adim

#endif  // ADIM_ENUMERATE_HPP
