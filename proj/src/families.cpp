#include "adim/families.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace adim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameters(what);
}

// number of unordered pairs on m vertices
int pairs(int m) { return m * (m - 1) / 2; }

// Adds the edges selected by mask among the given vertices, bits in
// lexicographic pair order (0,1),(0,2),...,(0,m-1),(1,2),...
void add_mask_edges(Graph& g, const std::vector<int>& verts, WideMask mask) {
  int bit = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j, ++bit)
      if ((mask >> bit) & 1) g.add_edge(verts[i], verts[j]);
}

std::string wide_to_string(WideMask v) {
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

WideMask wide_from_string(const std::string& text) {
  require(!text.empty(), "empty family parameter");
  WideMask v = 0;
  for (char c : text) {
    require(c >= '0' && c <= '9', "family parameter is not a decimal integer");
    const WideMask next = v * 10 + (c - '0');
    require(next >= v, "family parameter overflows 128 bits");
    v = next;
  }
  return v;
}

int to_int(WideMask v, const std::string& what) {
  require(v <= static_cast<WideMask>(kMaxOrder * kMaxOrder), what + " too large");
  return static_cast<int>(v);
}

const std::map<std::string, FamilyKind>& kind_tokens() {
  static const std::map<std::string, FamilyKind> tokens = {
      {"path", FamilyKind::path},
      {"cycle", FamilyKind::cycle},
      {"complete", FamilyKind::complete},
      {"empty", FamilyKind::empty_graph},
      {"kst", FamilyKind::complete_bipartite},
      {"complete_bipartite", FamilyKind::complete_bipartite},
      {"joinke", FamilyKind::join_complete_empty},
      {"join_complete_empty", FamilyKind::join_complete_empty},
      {"joinkk1", FamilyKind::join_complete_clique_plus_one},
      {"join_complete_clique_plus_one", FamilyKind::join_complete_clique_plus_one},
      {"extremal", FamilyKind::extremal_diameter},
      {"extremal_diameter", FamilyKind::extremal_diameter},
      {"omega", FamilyKind::omega_member},
      {"omega_member", FamilyKind::omega_member},
      {"example6", FamilyKind::example_six},
      {"example_six", FamilyKind::example_six},
  };
  return tokens;
}

const char* canonical_token(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::empty_graph: return "empty";
    case FamilyKind::complete_bipartite: return "kst";
    case FamilyKind::join_complete_empty: return "joinke";
    case FamilyKind::join_complete_clique_plus_one: return "joinkk1";
    case FamilyKind::extremal_diameter: return "extremal";
    case FamilyKind::omega_member: return "omega";
    case FamilyKind::example_six: return "example6";
  }
  return "?";
}

std::size_t arity(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
    case FamilyKind::empty_graph:
      return 1;
    case FamilyKind::omega_member:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, "family spec needs the form kind:p1,p2,...");
  const std::string token = text.substr(0, colon);
  const auto it = kind_tokens().find(token);
  require(it != kind_tokens().end(), "unknown family kind '" + token + "'");

  FamilySpec spec;
  spec.kind = it->second;
  std::string rest = text.substr(colon + 1);
  require(!rest.empty(), "family spec has no parameters");
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto comma = rest.find(',', pos);
    const auto piece = rest.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
    spec.params.push_back(wide_from_string(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  require(spec.params.size() == arity(spec.kind),
          std::string("family '") + canonical_token(spec.kind) + "' takes " +
              std::to_string(arity(spec.kind)) + " parameter(s)");
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = canonical_token(kind);
  out.push_back(':');
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += wide_to_string(params[i]);
  }
  return out;
}

Graph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  require(n <= kMaxOrder, "path order exceeds the order cap");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  require(n <= kMaxOrder, "cycle order exceeds the order cap");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  require(n <= kMaxOrder, "complete graph order exceeds the order cap");
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
  return g;
}

Graph make_empty(int n) {
  require(n >= 1, "empty graph needs n >= 1");
  require(n <= kMaxOrder, "empty graph order exceeds the order cap");
  return Graph(n);
}

Graph make_complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "K_{s,t} needs s, t >= 1");
  require(s + t <= kMaxOrder, "K_{s,t} order exceeds the order cap");
  Graph g(s + t);
  for (int v = 0; v < s; ++v)
    for (int w = 0; w < t; ++w) g.add_edge(v, s + w);
  return g;
}

Graph make_join_complete_empty(int s, int t) {
  require(s >= 1 && t >= 2, "K_s v empty_t needs s >= 1, t >= 2");
  return join(make_complete(s), make_empty(t));
}

Graph make_join_complete_clique_plus_one(int s, int t) {
  require(s >= 1 && t >= 1, "K_s v (K_t u K_1) needs s, t >= 1");
  return join(make_complete(s), disjoint_union(make_complete(t), make_complete(1)));
}

Graph extremal_diameter_graph(int n, int diameter) {
  const int d = diameter;
  require(d >= 3, "extremal construction needs diameter >= 3");
  require(n >= d + 1, "extremal construction needs n >= diameter + 1");
  require(n <= kMaxOrder, "extremal construction order exceeds the order cap");
  Graph g(n);
  for (int i = 0; i < d; ++i) g.add_edge(i, i + 1);
  for (int j = d + 1; j < n; ++j) {
    for (int i = 0; i <= 2; ++i) g.add_edge(i, j);
    for (int j2 = j + 1; j2 < n; ++j2) g.add_edge(j, j2);
  }
  return g;
}

Graph omega_member(int k, std::uint64_t v_edges, WideMask u_edges) {
  require(k >= 1, "omega family needs k >= 1");
  require(k + (1 << k) <= kMaxOrder, "omega family needs k + 2^k <= 32 (k <= 4)");
  const int profiles = 1 << k;
  const int vp = pairs(k), up = pairs(profiles);
  require((v_edges >> vp) == 0, "v_edges has bits beyond C(k,2)");
  require((u_edges >> up) == 0, "u_edges has bits beyond C(2^k,2)");

  Graph g(k + profiles);
  // profile j (0-based) encodes the j-th {1,2}-vector in lexicographic
  // order: entry i of profile j is 1 iff bit k-i of j is clear
  for (int j = 0; j < profiles; ++j)
    for (int i = 1; i <= k; ++i)
      if (((j >> (k - i)) & 1) == 0) g.add_edge(i - 1, k + j);

  std::vector<int> vs(k), us(profiles);
  for (int i = 0; i < k; ++i) vs[i] = i;
  for (int j = 0; j < profiles; ++j) us[j] = k + j;
  add_mask_edges(g, vs, v_edges);
  add_mask_edges(g, us, u_edges);
  return g;
}

Graph example_six_vertex(std::uint64_t h_edges, std::uint64_t k_edges) {
  require((h_edges >> 1) == 0, "h_edges has bits beyond the single pair ab");
  require((k_edges >> 6) == 0, "k_edges has bits beyond C(4,2)");
  Graph g(6);
  g.add_edge(0, 2);  // ac
  g.add_edge(0, 3);  // ad
  g.add_edge(1, 3);  // bd
  g.add_edge(1, 4);  // be
  if (h_edges & 1) g.add_edge(0, 1);
  add_mask_edges(g, {2, 3, 4, 5}, k_edges);
  return g;
}

std::vector<Graph> all_omega_members(int k) {
  require(k >= 1 && k <= 2, "full omega enumeration guarded to k <= 2");
  const std::uint64_t v_total = 1ull << pairs(k);
  const std::uint64_t u_total = 1ull << pairs(1 << k);
  std::vector<Graph> out;
  out.reserve(v_total * u_total);
  for (std::uint64_t v = 0; v < v_total; ++v)
    for (std::uint64_t u = 0; u < u_total; ++u)
      out.push_back(omega_member(k, v, u));
  return out;
}

Graph make_named(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::path:
      return make_path(to_int(p[0], "path order"));
    case FamilyKind::cycle:
      return make_cycle(to_int(p[0], "cycle order"));
    case FamilyKind::complete:
      return make_complete(to_int(p[0], "complete order"));
    case FamilyKind::empty_graph:
      return make_empty(to_int(p[0], "empty order"));
    case FamilyKind::complete_bipartite:
      return make_complete_bipartite(to_int(p[0], "s"), to_int(p[1], "t"));
    case FamilyKind::join_complete_empty:
      return make_join_complete_empty(to_int(p[0], "s"), to_int(p[1], "t"));
    case FamilyKind::join_complete_clique_plus_one:
      return make_join_complete_clique_plus_one(to_int(p[0], "s"),
                                                to_int(p[1], "t"));
    case FamilyKind::extremal_diameter:
      return extremal_diameter_graph(to_int(p[0], "n"), to_int(p[1], "D"));
    case FamilyKind::omega_member: {
      const int k = to_int(p[0], "k");
      require(p[1] <= ~std::uint64_t{0}, "v_edges too large");
      return omega_member(k, static_cast<std::uint64_t>(p[1]), p[2]);
    }
    case FamilyKind::example_six:
      return example_six_vertex(static_cast<std::uint64_t>(p[0]),
                                static_cast<std::uint64_t>(p[1]));
  }
  throw InvalidParameters("unhandled family kind");
}

}  // namespace adim
