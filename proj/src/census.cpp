#include "adim/census.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "adim/canonical.hpp"
#include "adim/dimension.hpp"
#include "adim/enumerate.hpp"
#include "adim/graph6.hpp"
#include "adim/parallel.hpp"

#include "json.hpp"

namespace adim {

CensusRecord make_census_record(const Graph& g) {
  // invariants are computed on the canonical labeling so the witness basis
  // does not depend on how the caller labeled the graph
  const Graph c = canonical_graph(g);
  CensusRecord r;
  r.graph6 = graph6_encode(c);
  r.n = c.order();
  r.m = c.edge_count();
  const auto diam = diameter(c);
  r.diameter = diam ? *diam : -1;

  const auto result = adjacency_dimension(c);
  r.dim2 = result.value;
  r.basis2 = result.basis;
  r.lb_population = result.stats.lb_population;
  r.lb_twins = result.stats.lb_twins;
  r.ub_diameter = result.stats.ub_diameter;
  r.dim = diam && r.n >= 2 ? metric_dimension(c).value : -1;

  for (const auto& cls : twin_partition(c).classes)
    r.twin_class_sizes.push_back(static_cast<int>(cls.size()));
  std::sort(r.twin_class_sizes.begin(), r.twin_class_sizes.end());
  return r;
}

void validate_census_record(const CensusRecord& r) {
  const auto fail = [&](const std::string& what) {
    throw Error("census record " + r.graph6 + ": " + what);
  };
  Graph g;
  try {
    g = graph6_decode(r.graph6);
  } catch (const Error& e) {
    fail(std::string("graph6 does not decode: ") + e.what());
  }
  if (g.order() != r.n) fail("order mismatch");
  if (g.edge_count() != r.m) fail("edge count mismatch");
  if (r.n < 1) fail("empty graph is not a census row");
  if (r.dim2 < 1 || (r.n >= 2 && r.dim2 > r.n - 1)) fail("dim2 out of range");
  if (r.lb_population > r.dim2) fail("population bound exceeds dim2");
  if (r.lb_twins > r.dim2) fail("twin bound exceeds dim2");
  if (r.ub_diameter >= 0 && r.dim2 > r.ub_diameter)
    fail("dim2 exceeds the diameter bound");
  if (r.dim >= 0 && r.dim > r.dim2) fail("dim exceeds dim2");
  if (r.n == 1) {
    if (r.diameter != 0) fail("order-1 diameter must be 0");
    if (r.ub_diameter != -1 || r.dim != -1)
      fail("order-1 rows leave dim and the diameter bound undefined");
  } else {
    if ((r.diameter == -1) != (r.ub_diameter == -1))
      fail("diameter and diameter bound disagree about connectivity");
    if ((r.diameter == -1) != (r.dim == -1))
      fail("dim must be undefined exactly for disconnected graphs");
  }
  if (static_cast<int>(r.basis2.size()) != r.dim2)
    fail("basis size differs from dim2");
  if (!std::is_sorted(r.basis2.begin(), r.basis2.end()) ||
      std::adjacent_find(r.basis2.begin(), r.basis2.end()) != r.basis2.end())
    fail("basis is not strictly ascending");
  for (const int v : r.basis2)
    if (v < 0 || v >= r.n) fail("basis vertex out of range");
  int covered = 0;
  for (const int size : r.twin_class_sizes) {
    if (size < 1) fail("twin class size below 1");
    covered += size;
  }
  if (covered != r.n) fail("twin classes do not cover the vertex set");
  if (!std::is_sorted(r.twin_class_sizes.begin(), r.twin_class_sizes.end()))
    fail("twin class sizes not sorted");
}

std::vector<CensusRecord> run_census(const CensusOptions& options) {
  if (options.max_n < 1 || options.max_n > kMaxEnumOrder)
    throw ScopeTooLarge("census guarded to orders 1.." +
                        std::to_string(kMaxEnumOrder));

  std::vector<Graph> universe;
  for (int n = 1; n <= options.max_n; ++n) {
    const auto part = enumerate_graphs(n, options.connected_only,
                                       options.workers);
    universe.insert(universe.end(), part.begin(), part.end());
  }

  std::vector<CensusRecord> records(universe.size());
  detail::parallel_chunks(universe.size(), options.workers,
                          [&](int, std::uint64_t begin, std::uint64_t end) {
                            for (std::uint64_t i = begin; i < end; ++i)
                              records[i] = make_census_record(universe[i]);
                          });
  std::sort(records.begin(), records.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
            });
  return records;
}

std::string census_record_to_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["diameter"] = r.diameter;
  j["dim2"] = r.dim2;
  j["dim"] = r.dim;
  j["twin_class_sizes"] = r.twin_class_sizes;
  j["basis2"] = r.basis2;
  j["lb_population"] = r.lb_population;
  j["lb_twins"] = r.lb_twins;
  j["ub_diameter"] = r.ub_diameter;
  return j.dump();
}

CensusRecord census_record_from_json(const std::string& line) {
  CensusRecord r;
  try {
    const auto j = nlohmann::json::parse(line);
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.diameter = j.at("diameter").get<int>();
    r.dim2 = j.at("dim2").get<int>();
    r.dim = j.at("dim").get<int>();
    r.twin_class_sizes = j.at("twin_class_sizes").get<std::vector<int>>();
    r.basis2 = j.at("basis2").get<std::vector<int>>();
    r.lb_population = j.at("lb_population").get<int>();
    r.lb_twins = j.at("lb_twins").get<int>();
    r.ub_diameter = j.at("ub_diameter").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed census line: ") + e.what());
  }
  return r;
}

void write_census_jsonl(const std::vector<CensusRecord>& records,
                        std::ostream& out) {
  for (const auto& r : records) {
    validate_census_record(r);
    out << census_record_to_json(r) << '\n';
  }
  if (!out) throw IOError("census write failed");
}

std::vector<CensusRecord> read_census_jsonl(std::istream& in) {
  std::vector<CensusRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(census_record_from_json(line));
    validate_census_record(records.back());
  }
  return records;
}

std::string census_summary(const std::vector<CensusRecord>& records) {
  std::map<int, std::map<int, int>> dist;  // order -> dim2 -> count
  for (const auto& r : records) ++dist[r.n][r.dim2];

  std::string out = "order  classes  dim2 distribution\n";
  for (const auto& [n, by_dim] : dist) {
    int classes = 0;
    std::string hist = "{";
    bool first = true;
    for (const auto& [d, count] : by_dim) {
      classes += count;
      hist += (first ? "" : ", ") + std::to_string(d) + ": " +
              std::to_string(count);
      first = false;
    }
    hist += "}";
    char head[32];
    std::snprintf(head, sizeof head, "%5d  %7d  ", n, classes);
    out += head + hist + "\n";
  }
  return out;
}

}  // namespace adim
