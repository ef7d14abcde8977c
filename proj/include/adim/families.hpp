#ifndef ADIM_FAMILIES_HPP
#define ADIM_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adim/graph.hpp"

namespace adim {

// Edge-choice masks can exceed 64 bits (the largest landmark family needs
// C(16,2) = 120 of them), so masks ride in a 128-bit word.
using WideMask = unsigned __int128;

enum class FamilyKind {
  path,
  cycle,
  complete,
  empty_graph,
  complete_bipartite,
  join_complete_empty,             // K_s v empty_t
  join_complete_clique_plus_one,   // K_s v (K_t u K_1)
  extremal_diameter,
  omega_member,
  example_six,
};

// A named parameterized construction; expansion is deterministic.
// CLI syntax is "kind:p1,p2,..." with the short kind tokens
// path, cycle, complete, empty, kst, joinke, joinkk1, extremal, omega,
// example6 (long names are accepted as aliases).
struct FamilySpec {
  FamilyKind kind{};
  std::vector<WideMask> params;

  static FamilySpec parse(const std::string& text);  // throws InvalidParameters
  std::string to_string() const;
};

// Expands a spec to its labeled graph. Throws InvalidParameters when the
// parameters violate the family's side conditions.
Graph make_named(const FamilySpec& spec);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_empty(int n);
Graph make_complete_bipartite(int s, int t);
Graph make_join_complete_empty(int s, int t);        // s >= 1, t >= 2
Graph make_join_complete_clique_plus_one(int s, int t);  // s, t >= 1

// Path v_0..v_D plus a clique u_1..u_{n-D-1} joined to v_0, v_1, v_2.
// Vertices 0..D are the path, D+1..n-1 the clique. Requires D >= 3 and
// n >= D+1; at n = D+1 the graph degenerates to the plain path.
Graph extremal_diameter_graph(int n, int diameter);

// k landmark vertices 0..k-1 plus 2^k profile vertices k..k+2^k-1, one per
// {1,2}-vector in lexicographic order; landmark i is adjacent to a profile
// vertex iff entry i of its vector is 1. v_edges/u_edges choose the edges
// inside the two groups, bits in lexicographic pair order (0,1),(0,2),...
Graph omega_member(int k, std::uint64_t v_edges, WideMask u_edges);

// Vertices a..f = 0..5 with fixed cross edges ac, ad, bd, be; h_edges bit 0
// adds ab, k_edges bits add edges inside {c,d,e,f} in lexicographic pair
// order. Every choice has adjacency dimension 2 with basis {a, b}.
Graph example_six_vertex(std::uint64_t h_edges, std::uint64_t k_edges);

// All 2^(C(k,2)+C(2^k,2)) labeled members, in (v_edges, u_edges) order.
// Guarded to k <= 2 (2 and 128 members).
std::vector<Graph> all_omega_members(int k);

}  // namespace adim

#endif  // ADIM_FAMILIES_HPP
