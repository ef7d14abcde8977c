// Command-line front end: exact adjacency/metric dimension of small graphs,
// family generators, the census pipeline and the verification suite.
//
// Exit codes: 0 success; 1 runtime failure (failed verification verdict,
// I/O trouble); 2 usage or input parse errors; 3 solver precondition
// violations (empty or disconnected input where connectivity is required).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "adim/census.hpp"
#include "adim/dimension.hpp"
#include "adim/families.hpp"
#include "adim/graph6.hpp"
#include "adim/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

int exit_code_for(const adim::Error& e) {
  if (dynamic_cast<const adim::MalformedGraph6*>(&e) ||
      dynamic_cast<const adim::InvalidParameters*>(&e) ||
      dynamic_cast<const adim::OrderOutOfRange*>(&e) ||
      dynamic_cast<const adim::ScopeTooLarge*>(&e) ||
      dynamic_cast<const adim::InvalidEdge*>(&e))
    return kExitUsage;
  if (dynamic_cast<const adim::IOError*>(&e)) return kExitFailure;
  return kExitPrecondition;
}

adim::Graph load_graph(const std::string& graph6, const std::string& family) {
  if (!graph6.empty() && !family.empty())
    throw adim::InvalidParameters("give a graph6 string or --family, not both");
  if (graph6.empty() && family.empty())
    throw adim::InvalidParameters("an input graph is required");
  if (!family.empty())
    return adim::make_named(adim::FamilySpec::parse(family));
  return adim::graph6_decode(graph6);
}

void print_graph_header(const adim::Graph& g) {
  const auto diam = adim::is_connected(g) && g.order() > 0
                        ? adim::diameter(g)
                        : std::nullopt;
  std::cout << "n=" << g.order() << " m=" << g.edge_count();
  if (g.order() > 0)
    std::cout << (diam ? " connected diameter=" + std::to_string(*diam)
                       : " disconnected");
  std::cout << "\n";
}

void print_basis(const std::vector<int>& basis) {
  std::cout << "basis2 =";
  for (const int v : basis) std::cout << ' ' << v;
  std::cout << "\n";
}

int run_dim2(const std::string& graph6, const std::string& family,
             const std::string& mode, bool show_basis, bool with_dim) {
  const adim::Graph g = load_graph(graph6, family);
  const auto solve_mode =
      mode == "naive" ? adim::SolveMode::naive : adim::SolveMode::pruned;
  const auto res = adim::adjacency_dimension(g, solve_mode);
  print_graph_header(g);
  std::cout << "dim2 = " << res.value << "\n";
  std::cout << "bounds: population=" << res.stats.lb_population
            << " twins=" << res.stats.lb_twins << " diameter=";
  if (res.stats.ub_diameter >= 0)
    std::cout << res.stats.ub_diameter;
  else
    std::cout << "undefined";
  std::cout << "\n";
  if (show_basis) print_basis(res.basis);
  if (with_dim) {
    if (adim::is_connected(g) && g.order() >= 2)
      std::cout << "dim = " << adim::metric_dimension(g).value << "\n";
    else
      std::cout << "dim = undefined\n";
  }
  std::cout << "sets tested: " << res.stats.sets_tested << "\n";
  return kExitOk;
}

int run_dim(const std::string& graph6, const std::string& family,
            bool show_basis) {
  const adim::Graph g = load_graph(graph6, family);
  const auto res = adim::metric_dimension(g);
  print_graph_header(g);
  std::cout << "dim = " << res.value << "\n";
  if (show_basis) {
    std::cout << "basis =";
    for (const int v : res.basis) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_census(int max_n, bool connected_only, const std::string& out_path,
               int workers) {
  adim::CensusOptions options;
  options.max_n = max_n;
  options.connected_only = connected_only;
  options.workers = workers;
  const auto records = adim::run_census(options);

  std::ofstream out(out_path);
  if (!out) throw adim::IOError("cannot open " + out_path + " for writing");
  adim::write_census_jsonl(records, out);
  out.close();
  if (!out) throw adim::IOError("write to " + out_path + " failed");

  std::cout << adim::census_summary(records);
  std::cout << records.size() << " records written to " << out_path << "\n";
  return kExitOk;
}

int run_verify(std::vector<std::string> ids, int max_n,
               const std::string& out_path, int workers, bool extended) {
  using adim::TheoremId;
  std::vector<TheoremId> selected;
  if (ids.empty()) ids.push_back("all");
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto t : adim::all_theorem_ids()) selected.push_back(t);
      continue;
    }
    const auto t = adim::theorem_id_from_name(id);
    if (!t || *t == TheoremId::open_question)
      throw adim::InvalidParameters("unknown verification id '" + id + "'");
    selected.push_back(*t);
  }
  if (max_n < 1 || max_n > 7)
    throw adim::InvalidParameters("--max-n must lie in 1..7");

  std::vector<adim::VerificationReport> reports;
  for (const auto id : selected) {
    const auto t0 = std::chrono::steady_clock::now();
    switch (id) {
      case TheoremId::extremes:
        reports.push_back(adim::verify_dim1_and_dimn1(max_n, workers));
        break;
      case TheoremId::identities:
        reports.push_back(adim::verify_lemma_adjacency_results(max_n, workers));
        break;
      case TheoremId::twins:
        reports.push_back(adim::verify_twin_lemma(max_n, workers));
        break;
      case TheoremId::diameter_bound:
        reports.push_back(adim::verify_diameter_bound(max_n, workers));
        break;
      case TheoremId::extremal: {
        std::vector<int> ds{5, 7};
        int n_max = 12;
        if (extended) {
          ds.push_back(10);
          ds.push_back(12);
          n_max = 14;
        }
        reports.push_back(
            adim::verify_extremal_construction(ds, n_max, workers));
        break;
      }
      case TheoremId::nminus2:
        if (max_n < 4)
          throw adim::InvalidParameters(
              "the n-2 characterization needs --max-n >= 4");
        reports.push_back(
            adim::verify_nminus2_characterization(max_n, workers));
        break;
      case TheoremId::omega: {
        const std::vector<int> ks{1, 2};
        reports.push_back(adim::verify_population_bound_and_omega(ks, workers));
        break;
      }
      case TheoremId::dim2_classification: {
        if (max_n < 3)
          throw adim::InvalidParameters(
              "the dimension-2 classification needs --max-n >= 3");
        for (int n = 3; n <= std::min(6, max_n); ++n)
          reports.push_back(adim::verify_dim2_classification(n, workers));
        break;
      }
      case TheoremId::open_question:
        break;  // unreachable; explore is its own subcommand
    }
    const std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - t0;
    std::cout << adim::report_to_text(reports.back());
    std::printf("elapsed: %.2fs\n\n", dt.count());
  }

  if (!out_path.empty()) {
    std::string text;
    for (const auto& rep : reports) text += adim::report_to_text(rep) + "\n";
    std::ofstream out(out_path);
    if (!out) throw adim::IOError("cannot open " + out_path + " for writing");
    out << text;
    std::ofstream json_out(out_path + ".json");
    if (!json_out)
      throw adim::IOError("cannot open " + out_path + ".json for writing");
    json_out << adim::reports_to_json(reports);
  }

  const bool all_pass =
      std::all_of(reports.begin(), reports.end(),
                  [](const adim::VerificationReport& r) { return r.pass(); });
  return all_pass ? kExitOk : kExitFailure;
}

int run_family(const std::string& spec_text, const std::string& format) {
  const auto spec = adim::FamilySpec::parse(spec_text);
  const adim::Graph g = adim::make_named(spec);
  if (format == "graph6") {
    std::cout << adim::graph6_encode(g) << "\n";
  } else if (format == "edges") {
    std::cout << g.order() << " " << g.edge_count() << "\n";
    for (int v = 0; v < g.order(); ++v)
      for (int w = v + 1; w < g.order(); ++w)
        if (g.adjacent(v, w)) std::cout << v << " " << w << "\n";
  } else {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (int v = 0; v < g.order(); ++v)
      for (int w = v + 1; w < g.order(); ++w)
        if (g.adjacent(v, w)) edges.push_back({v, w});
    j["edges"] = std::move(edges);
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

int run_explore(int diameter, int min_n, int max_n) {
  if (min_n == 0) min_n = diameter + 1;
  const auto report =
      adim::explore_open_question(diameter, {min_n, max_n});
  std::cout << adim::report_to_text(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact adjacency dimension toolkit"};
  app.require_subcommand(1);

  std::function<int()> action;

  // dim2
  std::string g6_input, family_input, mode = "pruned";
  bool show_basis = false, with_dim = false;
  auto* dim2_cmd = app.add_subcommand("dim2", "adjacency dimension of one graph");
  dim2_cmd->add_option("graph6", g6_input, "graph6 text");
  dim2_cmd->add_option("--family", family_input, "family spec, e.g. path:10");
  dim2_cmd->add_option("--mode", mode, "search mode")
      ->check(CLI::IsMember({"pruned", "naive"}));
  dim2_cmd->add_flag("--show-basis", show_basis, "print the witness basis");
  dim2_cmd->add_flag("--with-dim", with_dim, "also print the metric dimension");
  dim2_cmd->callback([&] {
    action = [&] { return run_dim2(g6_input, family_input, mode, show_basis, with_dim); };
  });

  // dim
  std::string dim_g6, dim_family;
  bool dim_show_basis = false;
  auto* dim_cmd = app.add_subcommand("dim", "metric dimension of one connected graph");
  dim_cmd->add_option("graph6", dim_g6, "graph6 text");
  dim_cmd->add_option("--family", dim_family, "family spec");
  dim_cmd->add_flag("--show-basis", dim_show_basis, "print the witness basis");
  dim_cmd->callback([&] {
    action = [&] { return run_dim(dim_g6, dim_family, dim_show_basis); };
  });

  // census
  int census_max_n = 6, census_workers = 0;
  bool census_connected = false;
  std::string census_out;
  auto* census_cmd = app.add_subcommand("census", "invariants of all small graphs");
  census_cmd->add_option("--max-n", census_max_n, "largest order (1..7)")->required();
  census_cmd->add_flag("--connected-only", census_connected, "connected graphs only");
  census_cmd->add_option("--out", census_out, "JSON-lines output path")->required();
  census_cmd->add_option("--workers", census_workers, "worker threads (0 = auto)");
  census_cmd->callback([&] {
    action = [&] {
      return run_census(census_max_n, census_connected, census_out, census_workers);
    };
  });

  // verify
  std::vector<std::string> verify_ids;
  int verify_max_n = 6, verify_workers = 0;
  std::string verify_out;
  bool verify_extended = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("ids", verify_ids,
                         "checks to run: all, extremes, identities, twins, "
                         "diameter-bound, extremal, nminus2, omega, dim2");
  verify_cmd->add_option("--max-n", verify_max_n, "enumeration scope (1..7)");
  verify_cmd->add_option("--out", verify_out,
                         "write the text report here and JSON next to it");
  verify_cmd->add_option("--workers", verify_workers, "worker threads (0 = auto)");
  verify_cmd->add_flag("--extended", verify_extended,
                       "also check the slower extremal diameters 10 and 12");
  verify_cmd->callback([&] {
    action = [&] {
      return run_verify(verify_ids, verify_max_n, verify_out, verify_workers,
                        verify_extended);
    };
  });

  // family
  std::string family_spec, family_format = "graph6";
  auto* family_cmd = app.add_subcommand("family", "expand a family spec");
  family_cmd->add_option("spec", family_spec, "kind:p1,p2,...")->required();
  family_cmd->add_option("--format", family_format, "output format")
      ->check(CLI::IsMember({"graph6", "edges", "json"}));
  family_cmd->callback([&] {
    action = [&] { return run_family(family_spec, family_format); };
  });

  // explore
  int explore_diameter = 0, explore_min_n = 0, explore_max_n = 12;
  auto* explore_cmd =
      app.add_subcommand("explore", "scan for graphs attaining the diameter bound");
  explore_cmd->add_option("--diameter,-D", explore_diameter, "target diameter (3..6)")
      ->required();
  explore_cmd->add_option("--min-n", explore_min_n, "first order (default D+1)");
  explore_cmd->add_option("--max-n", explore_max_n, "last order (default 12)");
  explore_cmd->callback([&] {
    action = [&] { return run_explore(explore_diameter, explore_min_n, explore_max_n); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const adim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
