#ifndef ADIM_CENSUS_HPP
#define ADIM_CENSUS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "adim/graph.hpp"

namespace adim {

// One persisted row per canonical graph. -1 stands for "undefined": the
// diameter and metric dimension of disconnected graphs, the diameter upper
// bound of disconnected graphs, and the metric dimension at order 1.
struct CensusRecord {
  std::string graph6;  // canonical form
  int n = 0;
  int m = 0;
  int diameter = -1;
  int dim2 = 0;
  int dim = -1;
  std::vector<int> twin_class_sizes;  // ascending
  std::vector<int> basis2;            // witness adjacency basis, ascending
  int lb_population = -1;
  int lb_twins = -1;
  int ub_diameter = -1;

  bool operator==(const CensusRecord&) const = default;
};

CensusRecord make_census_record(const Graph& g);
void validate_census_record(const CensusRecord& r);  // throws Error

struct CensusOptions {
  int max_n = 6;
  bool connected_only = false;
  int workers = 0;
};

// One record per isomorphism class for orders 1..max_n, sorted by
// (n, graph6). Deterministic across runs and worker counts.
std::vector<CensusRecord> run_census(const CensusOptions& options);

std::string census_record_to_json(const CensusRecord& r);
CensusRecord census_record_from_json(const std::string& line);

// JSON lines, one record per line; both directions validate every record.
void write_census_jsonl(const std::vector<CensusRecord>& records,
                        std::ostream& out);
std::vector<CensusRecord> read_census_jsonl(std::istream& in);

// dim2 distribution per order, e.g. "{1: 2, 2: 2}" on the order-3 row.
std::string census_summary(const std::vector<CensusRecord>& records);

}  // namespace adim

#endif  // ADIM_CENSUS_HPP
