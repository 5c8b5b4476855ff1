#include "fairhouse/solvers_usw.hpp"

#include "fairhouse/solvers_ef.hpp"

namespace fairhouse {
namespace {

// Integral values above this total fall back to exact rationals: layered
// costs are bounded by (sum + 1)^2, which must stay far from int64 limits.
constexpr std::int64_t kInt64ValueBudget = 1'000'000;

template <typename Fn>
auto on_integral_values(const Instance& inst, Fn&& fn) {
  if (auto narrow = int64_values(inst, kInt64ValueBudget)) {
    if (narrow->values.sum() <= kInt64ValueBudget) return fn(narrow->values, narrow->factor);
  }
  IntegralValues wide = integral_values(inst);
  return fn(wide.values, wide.factor);
}

}  // namespace

Rational max_utilitarian_welfare(const Instance& inst) {
  return on_integral_values(inst, [](const auto& values, const Rational& factor) {
    using Scalar = typename std::decay_t<decltype(values)>::Scalar;
    const int n = static_cast<int>(values.rows());
    const int m = static_cast<int>(values.cols());
    CostGraph<Scalar> g(n, m + n);
    for (int i = 0; i < n; ++i) {
      for (int h = 0; h < m; ++h) g.add_edge(i, h, -values(i, h));
      for (int d = 0; d < n; ++d) g.add_edge(i, m + d, Scalar(0));
    }
    Scalar best = -matching_cost(g, min_cost_perfect_matching(g));
    return Rational(best) / factor;
  });
}

Allocation min_num_envy_max_usw(const Instance& inst) {
  return on_integral_values(inst, [](const auto& values, const Rational&) {
    auto layering = num_envy_layering(values);
    return decode_layered(layering, min_cost_perfect_matching(layering.combined()));
  });
}

Allocation min_total_envy_max_usw(const Instance& inst) {
  return on_integral_values(inst, [](const auto& values, const Rational&) {
    auto layering = total_envy_layering(values);
    return decode_layered(layering, min_cost_perfect_matching(layering.combined()));
  });
}

Allocation complete_allocation(const Instance& inst, const Allocation& alloc) {
  validate_allocation(alloc, inst.agent_count(), inst.house_count());
  const int n = inst.agent_count();
  const int m = inst.house_count();
  std::vector<char> taken(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < n; ++i)
    if (alloc.is_assigned(i)) taken[static_cast<std::size_t>(alloc.house(i))] = 1;

  Allocation out = alloc;
  int h = 0;
  for (int i = 0; i < n && !is_complete(inst, out); ++i) {
    if (out.is_assigned(i)) continue;
    while (h < m && taken[static_cast<std::size_t>(h)]) ++h;
    if (h == m) break;
    out.assign(i, h);
    taken[static_cast<std::size_t>(h)] = 1;
  }
  return out;
}

Allocation min_num_envy_complete(const Instance& inst) {
  if (inst.house_count() > inst.agent_count()) {
    throw PreconditionError("min_num_envy_complete requires m <= n (got m = " +
                            std::to_string(inst.house_count()) + ", n = " +
                            std::to_string(inst.agent_count()) + ")");
  }
  std::vector<int> all(static_cast<std::size_t>(inst.house_count()));
  for (int h = 0; h < inst.house_count(); ++h) all[static_cast<std::size_t>(h)] = h;
  const BipartiteGraph top = top_choice_graph(inst.values, all);
  const Matching matching = max_cardinality_matching(top);
  Allocation alloc(inst.agent_count());
  for (auto [i, h] : matching.pairs) alloc.assign(i, h);
  return complete_allocation(inst, alloc);
}

Allocation min_total_envy_complete_mleqn(const Instance& inst) {
  if (inst.house_count() > inst.agent_count()) {
    throw PreconditionError("min_total_envy_complete requires m <= n (got m = " +
                            std::to_string(inst.house_count()) + ", n = " +
                            std::to_string(inst.agent_count()) + ")");
  }
  return complete_allocation(inst, min_total_envy_max_usw(inst));
}

}  // namespace fairhouse
