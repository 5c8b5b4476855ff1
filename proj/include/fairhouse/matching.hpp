#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fairhouse/core.hpp"
#include "fairhouse/errors.hpp"

namespace fairhouse {

// Bipartite graph between `left_count` left vertices (agents) and
// `right_count` right vertices (houses or slots). Neighbor lists are kept in
// ascending order so every traversal is deterministic.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left_count, int right_count);

  // Throws std::out_of_range for bad endpoints and std::invalid_argument for
  // duplicate edges.
  void add_edge(int left, int right);

  bool has_edge(int left, int right) const {
    return present_[index(left, right)] != 0;
  }
  const std::vector<int>& neighbors(int left) const {
    return adjacency_[static_cast<std::size_t>(left)];
  }
  int left_count() const { return left_count_; }
  int right_count() const { return right_count_; }
  int edge_count() const { return edge_count_; }

 private:
  std::size_t index(int left, int right) const {
    return static_cast<std::size_t>(left) * static_cast<std::size_t>(right_count_) +
           static_cast<std::size_t>(right);
  }

  int left_count_ = 0;
  int right_count_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<char> present_;
};

// Pairs (left, right), sorted by left index.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  // partner[l] = matched right vertex or kUnassigned.
  std::vector<int> left_partners(int left_count) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Left set N' and its full neighborhood H' = N(N'), with |H'| < |N'|.
struct HallViolator {
  std::vector<int> agents;
  std::vector<int> houses;
};

// Augmenting-path maximum matching; left vertices are processed in ascending
// order and each tries its neighbors in ascending order.
Matching max_cardinality_matching(const BipartiteGraph& g);

// Returns nullopt when every left vertex that has at least one edge can be
// saturated simultaneously. Otherwise takes a maximum matching, picks the
// lowest-index unmatched left vertex with an edge, and returns the vertices
// reachable from it by alternating paths; for that set |H'| = |N'| - 1.
std::optional<HallViolator> find_minimal_hall_violator(const BipartiteGraph& g);

// Union of a maximum matching M of g with a pairing of the M-unmatched left
// vertices and M-unmatched right vertices in ascending order. Right vertex r
// stands for house house_ids[r] of an instance with `agent_count` agents.
Allocation max_size_allocation(const BipartiteGraph& g, std::span<const int> house_ids,
                               int agent_count);
// As above with right vertex r standing for house r.
Allocation max_size_allocation(const BipartiteGraph& g);

// Bipartite graph with a cost on every edge.
template <typename Cost>
class CostGraph {
 public:
  CostGraph() = default;
  CostGraph(int left_count, int right_count)
      : graph_(left_count, right_count),
        cost_(static_cast<std::size_t>(left_count) * static_cast<std::size_t>(right_count)) {}

  void add_edge(int left, int right, Cost cost) {
    graph_.add_edge(left, right);
    cost_[index(left, right)] = std::move(cost);
  }

  const BipartiteGraph& graph() const { return graph_; }
  int left_count() const { return graph_.left_count(); }
  int right_count() const { return graph_.right_count(); }
  bool has_edge(int left, int right) const { return graph_.has_edge(left, right); }
  const Cost& cost(int left, int right) const { return cost_[index(left, right)]; }

 private:
  std::size_t index(int left, int right) const {
    return static_cast<std::size_t>(left) * static_cast<std::size_t>(graph_.right_count()) +
           static_cast<std::size_t>(right);
  }

  BipartiteGraph graph_;
  std::vector<Cost> cost_;
};

template <typename Cost>
Cost matching_cost(const CostGraph<Cost>& g, const Matching& m) {
  Cost total(0);
  for (auto [l, r] : m.pairs) total += g.cost(l, r);
  return total;
}

namespace detail {

// Shortest-augmenting-path Hungarian method over `rows` x `cols`
// (rows <= cols), saturating every row. edge(r, c) returns a pointer to the
// cost or nullptr when the edge is absent. Costs must be non-negative.
// Returns the column assigned to each row, or nullopt when no row-saturating
// assignment exists.
template <typename Cost, typename EdgeFn>
std::optional<std::vector<int>> hungarian(int rows, int cols, EdgeFn edge) {
  std::vector<int> row_to_col(static_cast<std::size_t>(rows), kUnassigned);
  if (rows == 0) return row_to_col;
  if (rows > cols) return std::nullopt;

  const auto R = static_cast<std::size_t>(rows);
  const auto C = static_cast<std::size_t>(cols);
  std::vector<Cost> u(R + 1, Cost(0)), v(C + 1, Cost(0)), minv(C + 1, Cost(0));
  std::vector<std::size_t> p(C + 1, 0), way(C + 1, 0);
  std::vector<char> used(C + 1), finite(C + 1);

  for (std::size_t i = 1; i <= R; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(finite.begin(), finite.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      bool have_delta = false;
      Cost delta(0);
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= C; ++j) {
        if (used[j]) continue;
        if (const Cost* c = edge(static_cast<int>(i0 - 1), static_cast<int>(j - 1))) {
          Cost reduced = *c - u[i0] - v[j];
          if (!finite[j] || reduced < minv[j]) {
            minv[j] = std::move(reduced);
            finite[j] = 1;
            way[j] = j0;
          }
        }
        if (finite[j] && (!have_delta || minv[j] < delta)) {
          delta = minv[j];
          j1 = j;
          have_delta = true;
        }
      }
      if (!have_delta) return std::nullopt;
      for (std::size_t j = 0; j <= C; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (finite[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= C; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = static_cast<int>(j - 1);
  return row_to_col;
}

// Minimum-cost matching of g restricted to the given vertices that saturates
// the left list (saturate_left) or the right list, or nullopt when none
// exists.
template <typename Cost>
std::optional<Matching> restricted_min_cost(const CostGraph<Cost>& g,
                                            const std::vector<int>& lefts,
                                            const std::vector<int>& rights,
                                            bool saturate_left) {
  Matching out;
  if (saturate_left) {
    auto assignment = hungarian<Cost>(
        static_cast<int>(lefts.size()), static_cast<int>(rights.size()),
        [&](int r, int c) -> const Cost* {
          int l = lefts[static_cast<std::size_t>(r)];
          int h = rights[static_cast<std::size_t>(c)];
          return g.has_edge(l, h) ? &g.cost(l, h) : nullptr;
        });
    if (!assignment) return std::nullopt;
    for (std::size_t r = 0; r < lefts.size(); ++r)
      out.pairs.emplace_back(lefts[r], rights[static_cast<std::size_t>((*assignment)[r])]);
  } else {
    auto assignment = hungarian<Cost>(
        static_cast<int>(rights.size()), static_cast<int>(lefts.size()),
        [&](int r, int c) -> const Cost* {
          int h = rights[static_cast<std::size_t>(r)];
          int l = lefts[static_cast<std::size_t>(c)];
          return g.has_edge(l, h) ? &g.cost(l, h) : nullptr;
        });
    if (!assignment) return std::nullopt;
    for (std::size_t r = 0; r < rights.size(); ++r)
      out.pairs.emplace_back(lefts[static_cast<std::size_t>((*assignment)[r])], rights[r]);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace detail

// Minimum-cost matching saturating the smaller side of g (the left side on
// ties). Costs may be negative. Among minimum-cost matchings the
// lexicographically smallest pair list is returned. Throws InfeasibleError
// when no saturating matching exists.
template <typename Cost>
Matching min_cost_perfect_matching(const CostGraph<Cost>& g) {
  const int L = g.left_count();
  const int R = g.right_count();
  const bool saturate_left = L <= R;

  // Every saturating matching has exactly min(L, R) edges, so shifting all
  // costs by a constant preserves the optimum; the Hungarian kernel needs
  // non-negative costs.
  bool have_min = false;
  Cost min_cost(0);
  for (int l = 0; l < L; ++l)
    for (int r : g.graph().neighbors(l))
      if (!have_min || g.cost(l, r) < min_cost) {
        min_cost = g.cost(l, r);
        have_min = true;
      }
  CostGraph<Cost> shifted(L, R);
  for (int l = 0; l < L; ++l)
    for (int r : g.graph().neighbors(l)) shifted.add_edge(l, r, g.cost(l, r) - min_cost);

  std::vector<int> lefts(static_cast<std::size_t>(L)), rights(static_cast<std::size_t>(R));
  for (int l = 0; l < L; ++l) lefts[static_cast<std::size_t>(l)] = l;
  for (int r = 0; r < R; ++r) rights[static_cast<std::size_t>(r)] = r;

  auto best = detail::restricted_min_cost(shifted, lefts, rights, saturate_left);
  if (!best) {
    throw InfeasibleError("no matching saturates the smaller side (" +
                          std::to_string(std::min(L, R)) + " vertices)");
  }
  const Cost optimum = matching_cost(shifted, *best);

  // Fix left vertices in ascending order to the smallest partner (or to
  // "unmatched" when the right side is the one saturated) that still admits
  // an optimal completion.
  Matching fixed;
  Cost fixed_cost(0);
  std::vector<char> right_used(static_cast<std::size_t>(R), 0);
  std::vector<int> current = best->left_partners(L);
  for (int l = 0; l < L; ++l) {
    std::vector<int> rest_left;
    for (int x = l + 1; x < L; ++x) rest_left.push_back(x);

    auto try_choice = [&](int r) -> bool {
      std::vector<int> rest_right;
      for (int y = 0; y < R; ++y)
        if (!right_used[static_cast<std::size_t>(y)] && y != r) rest_right.push_back(y);
      Cost base = fixed_cost;
      if (r != kUnassigned) base += shifted.cost(l, r);
      if (saturate_left ? rest_left.size() > rest_right.size()
                        : rest_right.size() > rest_left.size())
        return false;
      auto tail =
          detail::restricted_min_cost(shifted, rest_left, rest_right, saturate_left);
      if (!tail || base + matching_cost(shifted, *tail) != optimum) return false;
      current.assign(static_cast<std::size_t>(L), kUnassigned);
      for (const auto& [a, b] : fixed.pairs) current[static_cast<std::size_t>(a)] = b;
      if (r != kUnassigned) current[static_cast<std::size_t>(l)] = r;
      for (auto [a, b] : tail->pairs) current[static_cast<std::size_t>(a)] = b;
      return true;
    };

    const int incumbent = current[static_cast<std::size_t>(l)];
    int chosen = incumbent;
    for (int r : g.graph().neighbors(l)) {
      if (right_used[static_cast<std::size_t>(r)]) continue;
      if (r == incumbent) break;
      if (try_choice(r)) {
        chosen = r;
        break;
      }
    }
    if (chosen != kUnassigned) {
      fixed.pairs.emplace_back(l, chosen);
      fixed_cost += shifted.cost(l, chosen);
      right_used[static_cast<std::size_t>(chosen)] = 1;
    }
  }
  return fixed;
}

}  // namespace fairhouse
