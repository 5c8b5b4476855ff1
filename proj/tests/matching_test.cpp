#include <random>

#include <gtest/gtest.h>

#include "fairhouse/matching.hpp"
#include "support/reference.hpp"

namespace fairhouse {
namespace {

BipartiteGraph random_graph(std::mt19937& rng, int l, int r, double density) {
  std::bernoulli_distribution coin(density);
  BipartiteGraph g(l, r);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < r; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

bool uses_edges_only(const BipartiteGraph& g, const Allocation& a) {
  for (int i = 0; i < a.agent_count(); ++i)
    if (a.is_assigned(i) && !g.has_edge(i, a.house(i))) return false;
  return true;
}

int brute_max_matching(const BipartiteGraph& g) {
  int best = 0;
  for (const auto& a : ref::allocations(g.left_count(), g.right_count()))
    if (uses_edges_only(g, a)) best = std::max(best, a.size());
  return best;
}

std::vector<int> neighborhood(const BipartiteGraph& g, const std::vector<int>& lefts) {
  std::vector<int> out;
  for (int l : lefts)
    for (int r : g.neighbors(l)) out.push_back(r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TEST(BipartiteGraphTest, RejectsBadEdges) {
  BipartiteGraph g(2, 2);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(0, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(2, 0), std::out_of_range);
  EXPECT_THROW(g.add_edge(0, -1), std::out_of_range);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(BipartiteGraphTest, NeighborsStaySorted) {
  BipartiteGraph g(1, 5);
  for (int r : {3, 0, 4, 1}) g.add_edge(0, r);
  EXPECT_EQ(g.neighbors(0), (std::vector<int>{0, 1, 3, 4}));
}

TEST(MaxMatchingTest, AgreesWithBruteForce) {
  std::mt19937 rng(1);
  for (int round = 0; round < 300; ++round) {
    const int l = 1 + round % 5, r = 1 + (round / 5) % 5;
    const BipartiteGraph g = random_graph(rng, l, r, 0.4);
    const Matching m = max_cardinality_matching(g);
    ASSERT_EQ(m.size(), brute_max_matching(g));
    std::vector<int> rights;
    for (auto [a, b] : m.pairs) {
      ASSERT_TRUE(g.has_edge(a, b));
      rights.push_back(b);
    }
    std::sort(rights.begin(), rights.end());
    ASSERT_EQ(std::unique(rights.begin(), rights.end()), rights.end());
  }
}

TEST(HallViolatorTest, NoneWhenEveryLikerFits) {
  BipartiteGraph g(3, 3);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  g.add_edge(1, 1);
  EXPECT_FALSE(find_minimal_hall_violator(g));
}

TEST(HallViolatorTest, TwoAgentsOneHouse) {
  BipartiteGraph g(3, 2);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  auto v = find_minimal_hall_violator(g);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->agents, (std::vector<int>{0, 2}));
  EXPECT_EQ(v->houses, (std::vector<int>{1}));
}

TEST(HallViolatorTest, PropertiesOnRandomGraphs) {
  std::mt19937 rng(2);
  for (int round = 0; round < 400; ++round) {
    const int l = 1 + round % 6, r = 1 + (round / 6) % 5;
    const BipartiteGraph g = random_graph(rng, l, r, 0.35);
    int likers = 0;
    for (int i = 0; i < l; ++i) likers += !g.neighbors(i).empty();
    const auto v = find_minimal_hall_violator(g);
    ASSERT_EQ(v.has_value(), brute_max_matching(g) < likers);
    if (!v) continue;
    ASSERT_EQ(v->houses, neighborhood(g, v->agents));
    ASSERT_EQ(v->houses.size() + 1, v->agents.size());
  }
}

TEST(MaxSizeAllocationTest, FillsWithComplementPairs) {
  BipartiteGraph g(3, 3);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  const std::vector<int> ids{4, 7, 9};
  const Allocation a = max_size_allocation(g, ids, 3);
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.house(0), 4);
  EXPECT_EQ(a.house(1), 7);
  EXPECT_EQ(a.house(2), 9);
}

TEST(MaxSizeAllocationTest, SizeIsMinOfSides) {
  std::mt19937 rng(3);
  for (int round = 0; round < 100; ++round) {
    const int l = 1 + round % 5, r = 1 + (round / 5) % 5;
    const BipartiteGraph g = random_graph(rng, l, r, 0.5);
    const Allocation a = max_size_allocation(g);
    ASSERT_EQ(a.size(), std::min(l, r));
    ASSERT_NO_THROW(validate_allocation(a, l, r));
  }
}

struct BruteMinCost {
  bool feasible = false;
  long long cost = 0;
  std::vector<std::pair<int, int>> pairs;
};

BruteMinCost brute_min_cost(const CostGraph<long long>& g) {
  BruteMinCost best;
  const int need = std::min(g.left_count(), g.right_count());
  for (const auto& a : ref::allocations(g.left_count(), g.right_count())) {
    if (a.size() != need || !uses_edges_only(g.graph(), a)) continue;
    long long cost = 0;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a.agent_count(); ++i)
      if (a.is_assigned(i)) {
        cost += g.cost(i, a.house(i));
        pairs.emplace_back(i, a.house(i));
      }
    if (!best.feasible || cost < best.cost || (cost == best.cost && pairs < best.pairs))
      best = {true, cost, pairs};
  }
  return best;
}

TEST(MinCostMatchingTest, AgreesWithBruteForceIncludingTieBreak) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long long> cost(-3, 3);
  for (int round = 0; round < 400; ++round) {
    const int l = 1 + round % 5, r = 1 + (round / 5) % 5;
    const BipartiteGraph shape = random_graph(rng, l, r, 0.7);
    CostGraph<long long> g(l, r);
    for (int i = 0; i < l; ++i)
      for (int j : shape.neighbors(i)) g.add_edge(i, j, cost(rng));
    const BruteMinCost expected = brute_min_cost(g);
    if (!expected.feasible) {
      ASSERT_THROW(min_cost_perfect_matching(g), InfeasibleError);
      continue;
    }
    const Matching m = min_cost_perfect_matching(g);
    ASSERT_EQ(matching_cost(g, m), expected.cost);
    ASSERT_EQ(m.pairs, expected.pairs) << "round " << round;
  }
}

TEST(MinCostMatchingTest, RationalCostsWork) {
  CostGraph<Rational> g(2, 2);
  g.add_edge(0, 0, Rational(1, 3));
  g.add_edge(0, 1, Rational(1, 2));
  g.add_edge(1, 0, Rational(1, 4));
  g.add_edge(1, 1, Rational(1, 2));
  const Matching m = min_cost_perfect_matching(g);
  EXPECT_EQ(matching_cost(g, m), Rational(3, 4));
  EXPECT_EQ(m.pairs, (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
}

TEST(MinCostMatchingTest, EmptySideIsTriviallyFeasible) {
  CostGraph<long long> g(0, 3);
  EXPECT_EQ(min_cost_perfect_matching(g).size(), 0);
}

}  // namespace
}  // namespace fairhouse
