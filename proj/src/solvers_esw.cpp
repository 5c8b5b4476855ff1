#include "fairhouse/solvers_esw.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairhouse/solvers_ef.hpp"

namespace fairhouse {
namespace {

std::vector<Rational> distinct_positive_descending(const Instance& inst) {
  std::vector<Rational> out;
  for (Eigen::Index k = 0; k < inst.values.size(); ++k)
    if (inst.values.data()[k] > 0) out.push_back(inst.values.data()[k]);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

BipartiteGraph threshold_graph(const Instance& inst, const Rational& beta) {
  BipartiteGraph g(inst.agent_count(), inst.house_count());
  for (int i = 0; i < inst.agent_count(); ++i)
    for (int h = 0; h < inst.house_count(); ++h)
      if (inst.value(i, h) >= beta) g.add_edge(i, h);
  return g;
}

EswSweep max_esw_sweep(const Instance& inst) {
  EswSweep sweep;
  sweep.result.allocation = Allocation(inst.agent_count());
  const std::vector<Rational> betas = distinct_positive_descending(inst);

  std::vector<Matching> matchings;
  for (const Rational& beta : betas) {
    matchings.push_back(max_cardinality_matching(threshold_graph(inst, beta)));
    const int size = matchings.back().size();
    if (!sweep.profile.empty() && size < sweep.profile.back().matching_size)
      throw std::logic_error("threshold graph matching shrank as beta decreased");
    sweep.profile.push_back({beta, size});
  }

  for (int k = inst.agent_count(); k >= 1; --k) {
    for (std::size_t b = 0; b < betas.size(); ++b) {
      if (sweep.profile[b].matching_size < k) continue;
      for (auto [i, h] : matchings[b].pairs) sweep.result.allocation.assign(i, h);
      sweep.result.k = matchings[b].size();
      sweep.result.beta = betas[b];
      return sweep;
    }
  }
  return sweep;
}

EswResult max_esw(const Instance& inst) { return max_esw_sweep(inst).result; }

Instance reduced_instance(const Instance& inst, const Rational& beta) {
  Instance out = inst;
  for (Eigen::Index k = 0; k < out.values.size(); ++k)
    if (out.values.data()[k] < beta) out.values.data()[k] = 0;
  return out;
}

std::optional<EnvyFreeEswResult> max_esw_envy_free(const Instance& inst) {
  const EswResult esw = max_esw(inst);
  const Instance reduced = reduced_instance(inst, esw.beta);
  Allocation alloc = max_size_envy_free(reduced).allocation;

  int positive = 0;
  for (int i = 0; i < inst.agent_count(); ++i)
    if (alloc.is_assigned(i) && reduced.value(i, alloc.house(i)) > 0) ++positive;
  if (positive < esw.k) return std::nullopt;

  EnvyFreeEswResult out;
  out.envy_free_reduced = is_envy_free(reduced, alloc);
  out.envy_free_original = is_envy_free(inst, alloc);
  out.allocation = std::move(alloc);
  out.k = esw.k;
  out.beta = esw.beta;
  return out;
}

Instance shift_valuations(const Instance& inst, const Rational& beta) {
  const std::vector<Rational> positives = distinct_positive_descending(inst);
  if (!(beta > 0) || (!positives.empty() && !(beta < positives.back()))) {
    throw std::invalid_argument("shift " + format_rational(beta) +
                                " must lie strictly between 0 and the least positive value");
  }
  Instance out = inst;
  for (Eigen::Index k = 0; k < out.values.size(); ++k) out.values.data()[k] += beta;
  return out;
}

OracleResult min_num_envy_max_esw(const Instance& inst, std::uint64_t budget) {
  return oracle_solve(inst, Objective::MinNumEnvy, Constraint::max_esw(), budget);
}

OracleResult min_total_envy_max_esw(const Instance& inst, std::uint64_t budget) {
  return oracle_solve(inst, Objective::MinTotalEnvy, Constraint::max_esw(), budget);
}

OracleResult minimax_total_envy_max_esw(const Instance& inst, std::uint64_t budget) {
  return oracle_solve(inst, Objective::MinimaxTotalEnvy, Constraint::max_esw(), budget);
}

}  // namespace fairhouse
