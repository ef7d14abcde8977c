#include "adim/verify.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "adim/canonical.hpp"
#include "adim/dimension.hpp"
#include "adim/enumerate.hpp"
#include "adim/families.hpp"
#include "adim/graph6.hpp"
#include "adim/parallel.hpp"

#include "json.hpp"

namespace adim {

namespace {

std::unordered_set<std::string> canon_set(const std::vector<Graph>& graphs) {
  std::unordered_set<std::string> set;
  for (const auto& g : graphs) set.insert(canonical_form(g));
  return set;
}

// Partitions the universe across workers; each graph's check appends its
// counterexamples to a worker-local vector and returns how many individual
// checks it ran. The merged result is sorted, so the report does not depend
// on the worker count.
template <class Check>
void scan_graphs(const std::vector<Graph>& universe, int workers,
                 VerificationStats& stats,
                 std::vector<Counterexample>& sink, Check&& check) {
  const int w = detail::resolve_workers(workers);
  std::vector<std::vector<Counterexample>> locals(w);
  std::vector<std::uint64_t> counts(w, 0);
  detail::parallel_chunks(
      universe.size(), w,
      [&](int id, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i)
          counts[id] += check(universe[i], locals[id]);
      });
  stats.graphs_checked += universe.size();
  for (int i = 0; i < w; ++i) {
    stats.checks_run += counts[i];
    sink.insert(sink.end(), locals[i].begin(), locals[i].end());
  }
}

void finalize(VerificationReport& rep) {
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
}

std::string itoa(std::uint64_t v) { return std::to_string(v); }

}  // namespace

namespace characterizations {

std::vector<Graph> dim1_graphs(int n) {
  switch (n) {
    case 1:
      return {make_path(1)};
    case 2:
      return {make_path(2), complement(make_path(2))};
    case 3:
      return {make_path(3), complement(make_path(3))};
    default:
      return {};
  }
}

std::vector<Graph> dimn1_graphs(int n) {
  if (n < 2) return {};
  return {make_complete(n), make_empty(n)};
}

std::vector<Graph> nminus2_graphs(int n) {
  if (n < 4) return {};
  std::vector<Graph> cand;
  if (n == 4) cand.push_back(make_path(4));
  for (int s = 1; s < n; ++s) {
    const int t = n - s;
    if (s <= t) cand.push_back(make_complete_bipartite(s, t));
    if (t >= 2) cand.push_back(make_join_complete_empty(s, t));
  }
  for (int s = 1; s + 1 < n; ++s)
    cand.push_back(make_join_complete_clique_plus_one(s, n - s - 1));

  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const auto& g : cand)
    for (const Graph& h : {g, complement(g)}) {
      const auto form = canonical_form(h);
      if (seen.insert(form).second) out.push_back(graph6_decode(form));
    }
  return out;
}

std::vector<Graph> dim2_graphs(int n) {
  switch (n) {
    case 3:
      return {make_complete(3), make_empty(3)};
    case 4: {
      const std::unordered_set<std::string> excluded{
          canonical_form(make_complete(4)), canonical_form(make_empty(4))};
      std::vector<Graph> out;
      for (const auto& g : enumerate_graphs(4))
        if (!excluded.count(canonical_form(g))) out.push_back(g);
      return out;
    }
    case 5: {
      const std::vector<Graph> seven = {
          make_complete(5),
          make_complete_bipartite(1, 4),
          make_complete_bipartite(2, 3),
          make_join_complete_empty(3, 2),
          make_join_complete_empty(2, 3),
          make_join_complete_clique_plus_one(1, 3),
          make_join_complete_clique_plus_one(2, 2)};
      std::unordered_set<std::string> excluded;
      for (const auto& g : seven) {
        excluded.insert(canonical_form(g));
        excluded.insert(canonical_form(complement(g)));
      }
      std::vector<Graph> out;
      for (const auto& g : enumerate_graphs(5))
        if (!excluded.count(canonical_form(g))) out.push_back(g);
      return out;
    }
    case 6: {
      std::vector<Graph> out;
      std::unordered_set<std::string> seen;
      for (const auto& g : all_omega_members(2)) {
        const auto form = canonical_form(g);
        if (seen.insert(form).second) out.push_back(graph6_decode(form));
      }
      return out;
    }
    default:
      throw InvalidParameters("dimension-2 classification covers orders 3..6");
  }
}

}  // namespace characterizations

VerificationReport verify_dim1_and_dimn1(int max_n, int workers,
                                         const GraphListProvider& dim1,
                                         const GraphListProvider& dimn1) {
  if (max_n < 1 || max_n > kMaxEnumOrder)
    throw ScopeTooLarge("extremes check guarded to order <= " +
                        std::to_string(kMaxEnumOrder));
  VerificationReport rep;
  rep.theorem = TheoremId::extremes;
  rep.scope = "all non-isomorphic graphs of order 1.." + itoa(max_n) +
              "; the n-1 characterization is scoped to order >= 2";

  for (int n = 1; n <= max_n; ++n) {
    const auto universe = enumerate_graphs(n, false, workers);
    const auto allowed1 =
        canon_set(dim1 ? dim1(n) : characterizations::dim1_graphs(n));
    const auto allowedn1 =
        canon_set(dimn1 ? dimn1(n) : characterizations::dimn1_graphs(n));
    scan_graphs(universe, workers, rep.stats, rep.counterexamples,
                [&, n](const Graph& g, std::vector<Counterexample>& out)
                    -> std::uint64_t {
                  const int d = adjacency_dimension(g).value;
                  const std::string form = graph6_encode(g);
                  std::uint64_t checks = 1;
                  const bool listed1 = allowed1.count(form) > 0;
                  if ((d == 1) != listed1)
                    out.push_back({form,
                                   listed1 ? "dim2 = 1 (listed graph)"
                                           : "dim2 != 1 (unlisted graph)",
                                   "dim2 = " + itoa(d)});
                  if (n >= 2) {
                    ++checks;
                    const bool listedn1 = allowedn1.count(form) > 0;
                    if ((d == n - 1) != listedn1)
                      out.push_back({form,
                                     listedn1 ? "dim2 = n-1 (listed graph)"
                                              : "dim2 != n-1 (unlisted graph)",
                                     "dim2 = " + itoa(d)});
                  }
                  return checks;
                });
  }
  finalize(rep);
  return rep;
}

VerificationReport verify_lemma_adjacency_results(int max_n, int workers) {
  if (max_n < 1 || max_n > kMaxEnumOrder)
    throw ScopeTooLarge("identities check guarded to order <= " +
                        std::to_string(kMaxEnumOrder));
  VerificationReport rep;
  rep.theorem = TheoremId::identities;
  rep.scope = "complement invariance over all graphs of order 1.." +
              itoa(max_n) + "; metric comparisons over connected graphs of "
              "order 2.." + itoa(max_n) + "; paths and cycles of order 4..12";

  // paths and cycles against the closed formula
  for (int n = 4; n <= 12; ++n) {
    const int expected = path_cycle_dimension_formula(n);
    for (const bool cycle : {false, true}) {
      const Graph g = cycle ? make_cycle(n) : make_path(n);
      ++rep.stats.graphs_checked;
      ++rep.stats.checks_run;
      const int actual = adjacency_dimension(g).value;
      if (actual != expected)
        rep.counterexamples.push_back({graph6_encode(g),
                                       "dim2 = " + itoa(expected),
                                       "dim2 = " + itoa(actual)});
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    const auto universe = enumerate_graphs(n, false, workers);
    scan_graphs(universe, workers, rep.stats, rep.counterexamples,
                [&, n](const Graph& g, std::vector<Counterexample>& out)
                    -> std::uint64_t {
                  const std::string form = graph6_encode(g);
                  std::uint64_t checks = 1;
                  const int d2 = adjacency_dimension(g).value;
                  const int d2c = adjacency_dimension(complement(g)).value;
                  if (d2 != d2c)
                    out.push_back({form, "dim2(G) = dim2(complement)",
                                   "dim2 = " + itoa(d2) +
                                       ", complement dim2 = " + itoa(d2c)});
                  if (n >= 2 && is_connected(g)) {
                    ++checks;
                    const int dm = metric_dimension(g).value;
                    if (dm > d2)
                      out.push_back({form, "dim <= dim2",
                                     "dim = " + itoa(dm) +
                                         ", dim2 = " + itoa(d2)});
                    if (diameter(g) == 2) {
                      ++checks;
                      if (dm != d2)
                        out.push_back({form, "dim = dim2 at diameter 2",
                                       "dim = " + itoa(dm) +
                                           ", dim2 = " + itoa(d2)});
                    }
                  }
                  return checks;
                });
  }
  finalize(rep);
  return rep;
}

VerificationReport verify_twin_lemma(int max_n, int workers) {
  if (max_n < 1 || max_n > kMaxEnumOrder)
    throw ScopeTooLarge("twin check guarded to order <= " +
                        std::to_string(kMaxEnumOrder));
  VerificationReport rep;
  rep.theorem = TheoremId::twins;
  rep.scope = "every twin pair of every non-isomorphic graph of order 2.." +
              itoa(max_n);

  for (int n = 2; n <= max_n; ++n) {
    const auto universe = enumerate_graphs(n, false, workers);
    scan_graphs(
        universe, workers, rep.stats, rep.counterexamples,
        [&, n](const Graph& g, std::vector<Counterexample>& out)
            -> std::uint64_t {
          std::uint64_t checks = 0;
          const auto part = twin_partition(g);
          for (const auto& cls : part.classes) {
            for (std::size_t a = 0; a < cls.size(); ++a) {
              for (std::size_t b = a + 1; b < cls.size(); ++b) {
                ++checks;
                if (n == 2) continue;  // nothing left to resolve with
                std::vector<int> rest;
                for (int v = 0; v < n; ++v)
                  if (v != cls[a] && v != cls[b]) rest.push_back(v);
                if (is_adjacency_resolving(g, rest))
                  out.push_back(
                      {graph6_encode(g),
                       "V minus twin pair {" + itoa(cls[a]) + "," +
                           itoa(cls[b]) + "} is not resolving",
                       "resolving"});
              }
            }
          }
          return checks;
        });
  }
  finalize(rep);
  return rep;
}

VerificationReport verify_diameter_bound(int max_n, int workers) {
  if (max_n < 1 || max_n > kMaxEnumOrder)
    throw ScopeTooLarge("diameter bound check guarded to order <= " +
                        std::to_string(kMaxEnumOrder));
  VerificationReport rep;
  rep.theorem = TheoremId::diameter_bound;
  rep.scope = "all connected non-isomorphic graphs of order 2.." + itoa(max_n);

  for (int n = 2; n <= max_n; ++n) {
    const auto universe = enumerate_graphs(n, true, workers);
    scan_graphs(
        universe, workers, rep.stats, rep.counterexamples,
        [&](const Graph& g, std::vector<Counterexample>& out)
            -> std::uint64_t {
          const std::string form = graph6_encode(g);
          const int ub = upper_bound_diameter(g);
          const int d2 = adjacency_dimension(g).value;
          if (d2 > ub)
            out.push_back({form, "dim2 <= " + itoa(ub), "dim2 = " + itoa(d2)});
          const auto witness = resolving_set_from_diametral_path(g);
          if (!is_adjacency_resolving(g, witness))
            out.push_back({form, "diametral-path witness resolves",
                           "witness is not resolving"});
          if (static_cast<int>(witness.size()) > ub)
            out.push_back({form, "witness size <= " + itoa(ub),
                           "witness size = " + itoa(witness.size())});
          return 3;
        });
  }
  finalize(rep);
  return rep;
}

VerificationReport verify_extremal_construction(std::span<const int> diameters,
                                                int n_max, int workers) {
  (void)workers;  // each case is a single solver call; nothing to split
  VerificationReport rep;
  rep.theorem = TheoremId::extremal;
  std::string scope = "extremal construction for D in {";
  for (std::size_t i = 0; i < diameters.size(); ++i) {
    const int d = diameters[i];
    if (d < 3 || (d % 5 != 0 && d % 5 != 2))
      throw InvalidParameters(
          "extremal verification needs D >= 3 with D mod 5 in {0, 2}");
    scope += (i ? ", " : "") + itoa(d);
  }
  if (n_max > 14)
    throw InvalidParameters("extremal verification guarded to n <= 14");
  rep.scope = scope + "}, orders D+1.." + itoa(n_max);

  for (const int d : diameters) {
    for (int n = d + 1; n <= n_max; ++n) {
      const Graph g = extremal_diameter_graph(n, d);
      const std::string form = graph6_encode(g);
      ++rep.stats.graphs_checked;
      rep.stats.checks_run += 3;
      if (g.order() != n)
        rep.counterexamples.push_back(
            {form, "order " + itoa(n), "order " + itoa(g.order())});
      const auto diam = diameter(g);
      if (!diam || *diam != d)
        rep.counterexamples.push_back(
            {form, "diameter " + itoa(d),
             diam ? "diameter " + itoa(*diam) : "disconnected"});
      const int expected = n - d - 1 + (2 * d + 4) / 5;
      const int actual = adjacency_dimension(g).value;
      if (actual != expected)
        rep.counterexamples.push_back({form, "dim2 = " + itoa(expected),
                                       "dim2 = " + itoa(actual)});
    }
  }
  finalize(rep);
  return rep;
}

VerificationReport verify_nminus2_characterization(
    int max_n, int workers, const GraphListProvider& candidates) {
  if (max_n < 4 || max_n > kMaxEnumOrder)
    throw ScopeTooLarge("n-2 characterization check runs on orders 4.." +
                        std::to_string(kMaxEnumOrder));
  VerificationReport rep;
  rep.theorem = TheoremId::nminus2;
  rep.scope = "all non-isomorphic graphs of order 4.." + itoa(max_n);

  for (int n = 4; n <= max_n; ++n) {
    const auto universe = enumerate_graphs(n, false, workers);
    const auto listed = canon_set(candidates
                                      ? candidates(n)
                                      : characterizations::nminus2_graphs(n));
    scan_graphs(universe, workers, rep.stats, rep.counterexamples,
                [&, n](const Graph& g, std::vector<Counterexample>& out)
                    -> std::uint64_t {
                  const std::string form = graph6_encode(g);
                  const int d2 = adjacency_dimension(g).value;
                  const bool member = listed.count(form) > 0;
                  if ((d2 == n - 2) != member)
                    out.push_back({form,
                                   member ? "dim2 = n-2 (listed graph)"
                                          : "dim2 != n-2 (unlisted graph)",
                                   "dim2 = " + itoa(d2)});
                  return 1;
                });
  }
  finalize(rep);
  return rep;
}

VerificationReport verify_population_bound_and_omega(std::span<const int> ks,
                                                     int workers) {
  for (const int k : ks)
    if (k < 1 || k > 2)
      throw InvalidParameters("full omega verification covers k in {1, 2}");

  VerificationReport rep;
  rep.theorem = TheoremId::omega;
  rep.scope = "population bound over all graphs of order 1..7; landmark-"
              "profile families for the requested k";

  for (int n = 1; n <= kMaxEnumOrder; ++n) {
    const auto universe = enumerate_graphs(n, false, workers);
    scan_graphs(universe, workers, rep.stats, rep.counterexamples,
                [&, n](const Graph& g, std::vector<Counterexample>& out)
                    -> std::uint64_t {
                  const int d = adjacency_dimension(g).value;
                  if (n > d + (1 << d))
                    out.push_back({graph6_encode(g),
                                   "n <= dim2 + 2^dim2",
                                   "n = " + itoa(n) + ", dim2 = " + itoa(d)});
                  return 1;
                });
  }

  for (const int k : ks) {
    const int order = k + (1 << k);
    const auto members = all_omega_members(k);
    std::unordered_set<std::string> classes;
    std::vector<int> basis(k);
    for (int i = 0; i < k; ++i) basis[i] = i;

    for (const auto& g : members) {
      ++rep.stats.graphs_checked;
      rep.stats.checks_run += 3;
      const std::string form = canonical_form(g);
      classes.insert(form);
      if (g.order() != order)
        rep.counterexamples.push_back({form, "order " + itoa(order),
                                       "order " + itoa(g.order())});
      const int d2 = adjacency_dimension(g).value;
      if (d2 != k)
        rep.counterexamples.push_back(
            {form, "dim2 = " + itoa(k), "dim2 = " + itoa(d2)});
      if (!is_adjacency_resolving(g, basis))
        rep.counterexamples.push_back(
            {form, "landmark set {0.." + itoa(k - 1) + "} resolves",
             "not resolving"});
    }

    // completeness: the family covers every graph of that order and dimension
    std::unordered_set<std::string> from_census;
    for (const auto& g : enumerate_graphs(order, false, workers)) {
      ++rep.stats.checks_run;
      if (adjacency_dimension(g).value == k)
        from_census.insert(graph6_encode(g));
    }
    for (const auto& form : from_census)
      if (!classes.count(form))
        rep.counterexamples.push_back(
            {form, "isomorphic to a labeled family member", "not a member"});
    for (const auto& form : classes)
      if (!from_census.count(form))
        rep.counterexamples.push_back(
            {form, "family member has dim2 = " + itoa(k) + " at order " +
                       itoa(order),
             "census disagrees"});

    rep.notes.push_back("k=" + itoa(k) + ": " + itoa(members.size()) +
                        " labeled members, " + itoa(classes.size()) +
                        " isomorphism classes, " + itoa(from_census.size()) +
                        " census classes of order " + itoa(order) +
                        " with dim2 = " + itoa(k));
  }
  finalize(rep);
  return rep;
}

VerificationReport verify_dim2_classification(int n, int workers,
                                              const GraphListProvider& expected) {
  if (n < 3 || n > 6)
    throw InvalidParameters("dimension-2 classification covers orders 3..6");
  VerificationReport rep;
  rep.theorem = TheoremId::dim2_classification;
  rep.scope = "all non-isomorphic graphs of order " + itoa(n);

  const auto listed =
      canon_set(expected ? expected(n) : characterizations::dim2_graphs(n));
  const auto universe = enumerate_graphs(n, false, workers);
  scan_graphs(universe, workers, rep.stats, rep.counterexamples,
              [&](const Graph& g, std::vector<Counterexample>& out)
                  -> std::uint64_t {
                const std::string form = graph6_encode(g);
                const int d2 = adjacency_dimension(g).value;
                const bool member = listed.count(form) > 0;
                if ((d2 == 2) != member)
                  out.push_back({form,
                                 member ? "dim2 = 2 (listed graph)"
                                        : "dim2 != 2 (unlisted graph)",
                                 "dim2 = " + itoa(d2)});
                return 1;
              });
  finalize(rep);
  return rep;
}

VerificationReport explore_open_question(int diameter_target,
                                         std::pair<int, int> n_range) {
  if (diameter_target < 3 || diameter_target > 6)
    throw InvalidParameters("exploration covers diameters 3..6");
  const int lo = std::max(n_range.first, diameter_target + 1);
  const int hi = n_range.second;
  if (hi < lo || hi > 14)
    throw InvalidParameters("exploration range must fit D+1..14");

  VerificationReport rep;
  rep.theorem = TheoremId::open_question;
  rep.scope = "graphs of diameter " + itoa(diameter_target) + ", orders " +
              itoa(lo) + ".." + itoa(hi) +
              " (census orders <= 7 exhaustively, plus the extremal "
              "construction); positives only";

  for (int n = lo; n <= hi; ++n) {
    const int bound = n - diameter_target - 1 + (2 * diameter_target + 4) / 5;
    std::vector<std::string> attained;
    std::uint64_t examined = 0;
    bool exhaustive = false;

    if (n <= kMaxEnumOrder) {
      exhaustive = true;
      for (const auto& g : enumerate_graphs(n)) {
        const auto d = diameter(g);
        if (!d || *d != diameter_target) continue;
        ++examined;
        if (adjacency_dimension(g).value == bound)
          attained.push_back(graph6_encode(g));
      }
    }
    {
      const Graph g = extremal_diameter_graph(n, diameter_target);
      ++examined;
      const auto d = diameter(g);
      if (d && *d == diameter_target &&
          adjacency_dimension(g).value == bound) {
        const std::string form = graph6_encode(g);
        if (std::find(attained.begin(), attained.end(), form) ==
            attained.end())
          attained.push_back("construction " + form);
      }
    }
    rep.stats.graphs_checked += examined;
    rep.stats.checks_run += examined;

    std::string line = "D=" + itoa(diameter_target) + " n=" + itoa(n) +
                       ": bound " + itoa(bound);
    if (!attained.empty()) {
      std::sort(attained.begin(), attained.end());
      line += " attained by ";
      for (std::size_t i = 0; i < attained.size() && i < 3; ++i)
        line += (i ? ", " : "") + attained[i];
      if (attained.size() > 3)
        line += ", ... (" + itoa(attained.size()) + " total)";
    } else if (exhaustive) {
      line += " not attained by any graph of diameter " +
              itoa(diameter_target) + " (order exhausted)";
    } else {
      line += " not attained by the examined graphs (search not exhaustive)";
    }
    rep.notes.push_back(line);
  }
  return rep;
}

std::string theorem_id_name(TheoremId id) {
  switch (id) {
    case TheoremId::extremes: return "extremes";
    case TheoremId::identities: return "identities";
    case TheoremId::twins: return "twins";
    case TheoremId::diameter_bound: return "diameter-bound";
    case TheoremId::extremal: return "extremal";
    case TheoremId::nminus2: return "nminus2";
    case TheoremId::omega: return "omega";
    case TheoremId::dim2_classification: return "dim2";
    case TheoremId::open_question: return "explore";
  }
  return "?";
}

std::optional<TheoremId> theorem_id_from_name(const std::string& name) {
  for (const TheoremId id :
       {TheoremId::extremes, TheoremId::identities, TheoremId::twins,
        TheoremId::diameter_bound, TheoremId::extremal, TheoremId::nminus2,
        TheoremId::omega, TheoremId::dim2_classification,
        TheoremId::open_question})
    if (theorem_id_name(id) == name) return id;
  return std::nullopt;
}

std::vector<TheoremId> all_theorem_ids() {
  return {TheoremId::extremes,      TheoremId::identities,
          TheoremId::twins,         TheoremId::diameter_bound,
          TheoremId::extremal,      TheoremId::nminus2,
          TheoremId::omega,         TheoremId::dim2_classification};
}

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  out += "check: " + theorem_id_name(report.theorem) + "\n";
  out += "scope: " + report.scope + "\n";
  out += "verdict: " + std::string(report.pass() ? "PASS" : "FAIL") + "\n";
  out += "graphs checked: " + itoa(report.stats.graphs_checked) + "\n";
  out += "checks run: " + itoa(report.stats.checks_run) + "\n";
  out += "counterexamples: " + itoa(report.counterexamples.size()) + "\n";
  for (const auto& cex : report.counterexamples)
    out += "  [" + cex.graph6 + "] expected: " + cex.expected +
           "; actual: " + cex.actual + "\n";
  if (!report.notes.empty()) {
    out += "notes:\n";
    for (const auto& note : report.notes) out += "  - " + note + "\n";
  }
  return out;
}

std::string reports_to_json(std::span<const VerificationReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    nlohmann::ordered_json j;
    j["id"] = theorem_id_name(rep.theorem);
    j["scope"] = rep.scope;
    j["verdict"] = rep.pass() ? "pass" : "fail";
    j["graphs_checked"] = rep.stats.graphs_checked;
    j["checks_run"] = rep.stats.checks_run;
    auto cex = nlohmann::ordered_json::array();
    for (const auto& c : rep.counterexamples)
      cex.push_back({{"graph6", c.graph6},
                     {"expected", c.expected},
                     {"actual", c.actual}});
    j["counterexamples"] = std::move(cex);
    j["notes"] = rep.notes;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace adim
