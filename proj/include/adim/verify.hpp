#ifndef ADIM_VERIFY_HPP
#define ADIM_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adim/graph.hpp"

namespace adim {

// One executable check per statement the library implements, run
// exhaustively over enumerated small graphs or constructed families.
enum class TheoremId {
  extremes,        // dimension-1 and dimension-(n-1) characterizations
  identities,      // diam-2 equality, dim <= dim2, complement invariance,
                   // path/cycle formula
  twins,           // no resolving set avoids both vertices of a twin pair
  diameter_bound,  // dim2 <= n-D-1+floor((2D+4)/5) plus its witness
  extremal,        // the diameter-extremal construction attains the bound
  nminus2,         // dimension n-2 characterization
  omega,           // population bound and the order k+2^k families
  dim2_classification,  // full classification of dimension-2 graphs
  open_question,   // exploratory bound-attainment scan
};

std::string theorem_id_name(TheoremId id);
std::optional<TheoremId> theorem_id_from_name(const std::string& name);
std::vector<TheoremId> all_theorem_ids();  // everything except open_question

struct Counterexample {
  std::string graph6;
  std::string expected;
  std::string actual;
  auto operator<=>(const Counterexample&) const = default;
};

struct VerificationStats {
  std::uint64_t graphs_checked = 0;
  std::uint64_t checks_run = 0;
};

// verdict is pass iff no counterexample survived; counterexamples are
// sorted by graph6 so reports are byte-stable across runs and workers.
struct VerificationReport {
  TheoremId theorem{};
  std::string scope;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  VerificationStats stats;

  bool pass() const { return counterexamples.empty(); }
};

// Injectable characterization lists; tests perturb them to prove the
// harness actually reacts. An unset provider means "use the published list".
using GraphListProvider = std::function<std::vector<Graph>(int /*order*/)>;

namespace characterizations {
std::vector<Graph> dim1_graphs(int n);    // the five dimension-1 graphs
std::vector<Graph> dimn1_graphs(int n);   // complete graph and its complement
std::vector<Graph> nminus2_graphs(int n); // expanded candidates, complement-closed
std::vector<Graph> dim2_graphs(int n);    // all order-n graphs of dimension 2
}  // namespace characterizations

VerificationReport verify_dim1_and_dimn1(int max_n, int workers = 0,
                                         const GraphListProvider& dim1 = {},
                                         const GraphListProvider& dimn1 = {});
VerificationReport verify_lemma_adjacency_results(int max_n, int workers = 0);
VerificationReport verify_twin_lemma(int max_n, int workers = 0);
VerificationReport verify_diameter_bound(int max_n, int workers = 0);
VerificationReport verify_extremal_construction(std::span<const int> diameters,
                                                int n_max, int workers = 0);
VerificationReport verify_nminus2_characterization(
    int max_n, int workers = 0, const GraphListProvider& candidates = {});
VerificationReport verify_population_bound_and_omega(std::span<const int> ks,
                                                     int workers = 0);
VerificationReport verify_dim2_classification(
    int n, int workers = 0, const GraphListProvider& expected = {});

// Reports, per order in the range, whether any examined graph of diameter D
// attains the diameter upper bound. Examines the enumerated census (orders
// <= 7, exhaustive) plus the extremal construction; positives only, never a
// negative claim beyond the exhausted orders.
VerificationReport explore_open_question(int diameter,
                                         std::pair<int, int> n_range);

std::string report_to_text(const VerificationReport& report);
std::string reports_to_json(std::span<const VerificationReport> reports);

}  // namespace adim

#endif  // ADIM_VERIFY_HPP
