#pragma once

#include <optional>
#include <vector>

#include "fairhouse/core.hpp"
#include "fairhouse/matching.hpp"
#include "fairhouse/oracle.hpp"

namespace fairhouse {

// k agents receive value >= beta > 0, or (k, beta) = (0, 0) with an empty
// allocation.
struct EswResult {
  Allocation allocation;
  int k = 0;
  Rational beta{0};
};

// Maximum-matching size of the threshold graph G_beta (edges with
// v_i(h) >= beta) for one distinct positive value.
struct ThresholdStep {
  Rational beta;
  int matching_size = 0;
};

struct EswSweep {
  EswResult result;
  // One entry per distinct positive value, beta descending.
  std::vector<ThresholdStep> profile;
};

BipartiteGraph threshold_graph(const Instance& inst, const Rational& beta);

// Maximum egalitarian welfare in the (k, beta) sense: for k = n down to 1 and
// beta over the distinct positive values in descending order, the first
// threshold graph with a matching of size >= k. Throws std::logic_error if
// the matching sizes ever fail to be non-increasing in beta.
EswSweep max_esw_sweep(const Instance& inst);
EswResult max_esw(const Instance& inst);

struct EnvyFreeEswResult {
  Allocation allocation;
  int k = 0;
  Rational beta{0};
  // Envy-freeness under the reduced valuation (values below beta zeroed),
  // which the construction guarantees, and under the original valuation,
  // which it does not.
  bool envy_free_reduced = false;
  bool envy_free_original = false;
};

// Values below beta set to zero.
Instance reduced_instance(const Instance& inst, const Rational& beta);

// Envy-free allocation of maximum egalitarian welfare: runs the max-size
// envy-free procedure on the reduced instance and accepts its output when at
// least k agents receive positive reduced value. nullopt means "none exists".
std::optional<EnvyFreeEswResult> max_esw_envy_free(const Instance& inst);

// Adds beta to every value. Requires 0 < beta < the least positive value
// (any beta > 0 when there is none); throws std::invalid_argument otherwise.
Instance shift_valuations(const Instance& inst, const Rational& beta);

// Envy objectives restricted to maximum-ESW allocations, by exhaustive search.
OracleResult min_num_envy_max_esw(const Instance& inst, std::uint64_t budget = kDefaultBudget);
OracleResult min_total_envy_max_esw(const Instance& inst, std::uint64_t budget = kDefaultBudget);
OracleResult minimax_total_envy_max_esw(const Instance& inst,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace fairhouse
