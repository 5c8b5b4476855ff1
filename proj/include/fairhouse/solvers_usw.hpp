#pragma once

#include <cstdint>

#include "fairhouse/core.hpp"
#include "fairhouse/matching.hpp"

namespace fairhouse {

// Cost structure of the welfare-then-envy reductions. Left vertices are the
// n agents; right vertices are the m real houses followed by n dummy slots
// (a dummy stands for "unassigned"). Agent i is joined to real house h only
// when v_i(h) > 0 and to every dummy. On every edge
// cost = welfare + envy, welfare = -v_i(h) * scale, envy >= 0.
template <typename Scalar>
struct CostLayering {
  Scalar scale{0};
  int real_houses = 0;
  int dummy_slots = 0;
  BipartiteGraph edges;
  ValueMatrix<Scalar> welfare_cost;
  ValueMatrix<Scalar> envy_cost;

  CostGraph<Scalar> combined() const {
    CostGraph<Scalar> g(edges.left_count(), edges.right_count());
    for (int i = 0; i < edges.left_count(); ++i)
      for (int r : edges.neighbors(i)) g.add_edge(i, r, welfare_cost(i, r) + envy_cost(i, r));
    return g;
  }
};

namespace detail {

template <typename Scalar>
Scalar row_max(const ValueMatrix<Scalar>& values, int agent) {
  Scalar best(0);
  for (Eigen::Index h = 0; h < values.cols(); ++h)
    if (values(agent, h) > best) best = values(agent, h);
  return best;
}

template <typename Scalar>
CostLayering<Scalar> welfare_layering(const ValueMatrix<Scalar>& values, Scalar scale) {
  const int n = static_cast<int>(values.rows());
  const int m = static_cast<int>(values.cols());
  CostLayering<Scalar> out;
  out.scale = scale;
  out.real_houses = m;
  out.dummy_slots = n;
  out.edges = BipartiteGraph(n, m + n);
  out.welfare_cost = ValueMatrix<Scalar>::Zero(n, m + n);
  out.envy_cost = ValueMatrix<Scalar>::Zero(n, m + n);
  for (int i = 0; i < n; ++i) {
    for (int h = 0; h < m; ++h) {
      if (!(values(i, h) > Scalar(0))) continue;
      out.edges.add_edge(i, h);
      out.welfare_cost(i, h) = -values(i, h) * scale;
    }
    for (int d = 0; d < n; ++d) out.edges.add_edge(i, m + d);
  }
  return out;
}

}  // namespace detail

// Layering for fewest envious agents among welfare-maximizing allocations.
// Values must be integral (every positive value >= 1). scale = n + 1; the
// envy part is 0 on a most-preferred house and 1 elsewhere. A dummy counts as
// most preferred only for an agent that values every house at zero.
template <typename Scalar>
CostLayering<Scalar> num_envy_layering(const ValueMatrix<Scalar>& values) {
  const int n = static_cast<int>(values.rows());
  const int m = static_cast<int>(values.cols());
  auto out = detail::welfare_layering(values, Scalar(n + 1));
  for (int i = 0; i < n; ++i) {
    const Scalar best = detail::row_max(values, i);
    for (int r : out.edges.neighbors(i)) {
      const Scalar v = r < m ? values(i, r) : Scalar(0);
      out.envy_cost(i, r) = v == best ? Scalar(0) : Scalar(1);
    }
  }
  return out;
}

// Layering for least total envy among welfare-maximizing allocations.
// Values must be integral. scale = (sum of all values) + 1; the envy part of
// (i, h) is 0 on a most-preferred house and sum_g max(v_i(g) - v_i(h), 0)
// elsewhere, with v_i(dummy) = 0.
template <typename Scalar>
CostLayering<Scalar> total_envy_layering(const ValueMatrix<Scalar>& values) {
  const int n = static_cast<int>(values.rows());
  const int m = static_cast<int>(values.cols());
  Scalar total(0);
  for (Eigen::Index k = 0; k < values.size(); ++k) total += values.data()[k];
  auto out = detail::welfare_layering(values, total + Scalar(1));
  for (int i = 0; i < n; ++i) {
    const Scalar best = detail::row_max(values, i);
    for (int r : out.edges.neighbors(i)) {
      const Scalar v = r < m ? values(i, r) : Scalar(0);
      if (v == best) continue;
      Scalar envy(0);
      for (int g = 0; g < m; ++g)
        if (values(i, g) > v) envy += values(i, g) - v;
      out.envy_cost(i, r) = envy;
    }
  }
  return out;
}

// Reads an allocation off a matching over the layered graph; dummy slots
// decode to "unassigned".
template <typename Scalar>
Allocation decode_layered(const CostLayering<Scalar>& layering, const Matching& matching) {
  Allocation alloc(layering.edges.left_count());
  for (auto [i, r] : matching.pairs)
    if (r < layering.real_houses) alloc.assign(i, r);
  return alloc;
}

// Largest achievable utilitarian welfare (maximum-weight matching value).
Rational max_utilitarian_welfare(const Instance& inst);

// Maximum utilitarian welfare, then fewest envious agents.
Allocation min_num_envy_max_usw(const Instance& inst);

// Maximum utilitarian welfare, then least total envy.
Allocation min_total_envy_max_usw(const Instance& inst);

// Complete allocation with fewest envious agents; requires m <= n
// (PreconditionError otherwise). Agents matched in the positive top-choice
// graph are exactly the non-envious ones.
Allocation min_num_envy_complete(const Instance& inst);

// Pairs unassigned agents with unassigned houses in ascending index order
// until the allocation is complete.
Allocation complete_allocation(const Instance& inst, const Allocation& alloc);

// Complete allocation with least total envy; requires m <= n.
Allocation min_total_envy_complete_mleqn(const Instance& inst);

}  // namespace fairhouse
