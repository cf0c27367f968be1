#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wmst/graph.hpp"
#include "wmst/random.hpp"

namespace wmst {

/// Outcome of one invariant suite. A case is one generated input; it counts
/// as a violation if any property fails on it or a checked run throws.
struct CampaignResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::size_t lemma_violations = 0;  // subset raised by checked-mode runs
  std::string first_violation;

  bool passed() const noexcept { return violations == 0; }
};

/// Random instance for fuzzing: n in [2, max_n], varied density and noise,
/// and weight grids that range from tie-heavy (denominator 4) to fine.
WmstInstance fuzz_instance(Rng& rng, std::size_t max_n);

/// mst() cost equals brute_force_mst() cost, on graphs with n <= 7.
CampaignResult oracle_equivalence_campaign(std::size_t graphs, std::uint64_t seed);

/// For spanning trees t1, t2 of one graph and every e1 in t1 \ t2, the
/// exchange witness e2 lies in t2 \ t1, e1 is on e2's cycle in t1, and e2 is
/// on e1's cycle in t2.
CampaignResult exchange_witness_campaign(std::size_t graphs, std::uint64_t seed);

/// FtP and GFtP on random (instance, order) pairs: cost <= OPT + 2 eta for
/// both, and GFtP cost <= OPT(w-hat) + eta. Runs in checked mode when asked.
CampaignResult competitive_bound_campaign(std::size_t pairs, std::uint64_t seed, bool checked);

/// eta never grows when a random subset of predictions is corrected, and
/// |OPT(w-hat) - OPT(w)| <= eta.
CampaignResult error_measure_campaign(std::size_t instances, std::uint64_t seed);

/// On instances with at most 9 edges, the exact random-order expectation of
/// GFtP stays within OPT + 1.6932 eta, and FtP's equals its fixed cost.
CampaignResult random_order_campaign(std::size_t instances, std::uint64_t seed);

struct SelftestSizes {
  std::size_t oracle_graphs = 1000;
  std::size_t witness_graphs = 100;
  std::size_t run_pairs = 10000;
  std::size_t measure_instances = 10000;
  std::size_t random_order_instances = 500;
};

/// Every suite above, with checked runs.
std::vector<CampaignResult> run_selftest(std::uint64_t seed, const SelftestSizes& sizes = {});

}  // namespace wmst
