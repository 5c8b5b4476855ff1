#include <random>

#include <gtest/gtest.h>

#include "fairhouse/oracle.hpp"
#include "fairhouse/solvers_ef.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace fairhouse {
namespace {

TEST(AllocationCountTest, SmallCases) {
  EXPECT_EQ(allocation_count(1, 1), BigInt(2));
  EXPECT_EQ(allocation_count(2, 2), BigInt(7));
  EXPECT_EQ(allocation_count(4, 5), BigInt(501));
  EXPECT_EQ(allocation_count(5, 10), BigInt(63591));
}

TEST(EnumerateTest, VisitsEveryAllocationOnceInOrder) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const Instance inst(ValueMatrix<Rational>::Zero(n, m));
      const auto got = all_allocations(inst);
      ASSERT_EQ(got, ref::allocations(n, m));
      ASSERT_EQ(BigInt(got.size()), allocation_count(n, m));
    }
}

TEST(EnumerateTest, PopularPairHas501) {
  EXPECT_EQ(all_allocations(fixtures::load("popular_pair")).size(), 501u);
}

TEST(EnumerateTest, BudgetIsEnforced) {
  const Instance inst = fixtures::load("popular_pair");
  EXPECT_THROW(all_allocations(inst, 500), BudgetExceeded);
  EXPECT_NO_THROW(all_allocations(inst, 501));
  EXPECT_THROW(oracle_solve(inst, Objective::MinNumEnvy, Constraint::none(), 10), BudgetExceeded);
}

TEST(OracleTest, PopularPairCells) {
  const Instance inst = fixtures::load("popular_pair");
  EXPECT_EQ(oracle_solve(inst, Objective::MinNumEnvy, Constraint::complete()).value, Rational(1));
  EXPECT_EQ(oracle_solve(inst, Objective::MinNumEnvy, Constraint::max_usw()).value, Rational(2));
  EXPECT_EQ(oracle_solve(inst, Objective::MinTotalEnvy, Constraint::max_usw()).value, Rational(2));
  const OracleResult ef = oracle_solve(inst, Objective::MaxSizeEf, Constraint::none());
  EXPECT_EQ(ef.value, Rational(3));
  EXPECT_EQ(ef.candidates, 501u);
  EXPECT_FALSE(oracle_solve(inst, Objective::MaxSizeEf, Constraint::max_usw()).feasible);
  EXPECT_EQ(oracle_max_esw(inst), (EswValue{2, Rational(1)}));
}

TEST(OracleTest, ChainTotalEnvy) {
  EXPECT_EQ(oracle_solve(fixtures::load("chain"), Objective::MinTotalEnvy, Constraint::max_usw()).value,
            Rational(5));
}

TEST(OracleTest, SingleCellIsZero) {
  const Instance inst = Instance::from_rows({{Rational(3)}});
  for (Objective o : {Objective::MinNumEnvy, Objective::MinTotalEnvy, Objective::MinimaxTotalEnvy}) {
    const OracleResult r = oracle_solve(inst, o, Constraint::none());
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(r.value, Rational(0));
  }
}

TEST(OracleTest, WitnessIsLexicographicallySmallest) {
  const Instance inst(ValueMatrix<Rational>::Zero(2, 2));
  const OracleResult r = oracle_solve(inst, Objective::MinNumEnvy, Constraint::complete());
  EXPECT_EQ(r.witness, Allocation({0, 1}));
  EXPECT_EQ(r.optimum_count, 2u);
  EXPECT_EQ(r.candidates, 2u);
  EXPECT_EQ(oracle_solve(inst, Objective::MinNumEnvy, Constraint::none()).witness, Allocation(2));
}

TEST(OracleTest, SizeConstraintBeyondReachIsInfeasible) {
  const Instance inst = fixtures::load("shared_middle");
  const OracleResult r = oracle_solve(inst, Objective::MinTotalEnvy, Constraint::size_at_least(3));
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(oracle_solve(inst, Objective::MinTotalEnvy, Constraint::size_at_least(2)).feasible);
}

Rational expected_value(const Instance& inst, Objective o, Constraint c, bool& feasible) {
  const Rational best_usw = ref::best_usw(inst);
  const auto best_esw = ref::best_esw(inst);
  auto keep = [&](const Allocation& a) {
    switch (c.kind) {
      case Constraint::Kind::None: return true;
      case Constraint::Kind::MaxUsw: return ref::usw(inst, a) == best_usw;
      case Constraint::Kind::MaxEsw: return ref::esw(inst, a) == best_esw;
      case Constraint::Kind::Complete: return ref::complete(inst, a);
      case Constraint::Kind::SizeAtLeast: return a.size() >= c.k;
    }
    return false;
  };
  std::optional<Rational> v;
  switch (o) {
    case Objective::MaxSizeEf:
      v = ref::minimum(
          inst, [&](const Allocation& a) { return keep(a) && ref::envy_free(inst, a); },
          [&](const Allocation& a) { return Rational(-a.size()); });
      if (v) v = -*v;
      break;
    case Objective::MinNumEnvy:
      v = ref::minimum(inst, keep, [&](const Allocation& a) { return Rational(ref::num_envious(inst, a)); });
      break;
    case Objective::MinTotalEnvy:
      v = ref::minimum(inst, keep, [&](const Allocation& a) { return ref::total_envy(inst, a); });
      break;
    case Objective::MinimaxTotalEnvy:
      v = ref::minimum(inst, keep, [&](const Allocation& a) { return ref::max_envy(inst, a); });
      break;
  }
  feasible = v.has_value();
  return v.value_or(Rational(0));
}

TEST(OracleTest, EveryCellMatchesReference) {
  std::mt19937 rng(51);
  const Objective objectives[] = {Objective::MaxSizeEf, Objective::MinNumEnvy,
                                  Objective::MinTotalEnvy, Objective::MinimaxTotalEnvy};
  const Constraint constraints[] = {Constraint::none(), Constraint::max_usw(), Constraint::max_esw(),
                                    Constraint::complete(), Constraint::size_at_least(2)};
  for (int round = 0; round < 80; ++round) {
    const int n = 1 + round % 4, m = 1 + (round / 4) % 4;
    const Instance inst = ref::random_instance(rng, n, m, 0.5, round % 2);
    for (Objective o : objectives)
      for (Constraint c : constraints) {
        bool feasible = false;
        const Rational expected = expected_value(inst, o, c, feasible);
        const OracleResult r = oracle_solve(inst, o, c);
        ASSERT_EQ(r.feasible, feasible) << to_string(o) << " / " << to_string(c);
        if (!feasible) continue;
        ASSERT_EQ(r.value, expected) << to_string(o) << " / " << to_string(c);
        ASSERT_GE(r.optimum_count, 1u);
      }
  }
}

TEST(OracleTest, MaxSizeEnvyFreeWitnessAgreesWithPolynomialSolver) {
  std::mt19937 rng(52);
  for (int round = 0; round < 100; ++round) {
    const Instance inst = ref::random_instance(rng, 1 + round % 5, 1 + (round / 5) % 5, 0.5, round % 2);
    const OracleResult r = oracle_solve(inst, Objective::MaxSizeEf, Constraint::none());
    ASSERT_TRUE(r.feasible);
    ASSERT_TRUE(is_envy_free(inst, r.witness));
    ASSERT_EQ(r.value, Rational(max_size_envy_free(inst).allocation.size()));
  }
}

TEST(OracleTest, RelaxingCompletenessNeverHurts) {
  std::mt19937 rng(53);
  for (int round = 0; round < 100; ++round) {
    const Instance inst = ref::random_instance(rng, 1 + round % 4, 1 + (round / 4) % 5, 0.5, true);
    for (Objective o : {Objective::MinNumEnvy, Objective::MinTotalEnvy, Objective::MinimaxTotalEnvy})
      ASSERT_LE(oracle_solve(inst, o, Constraint::none()).value,
                oracle_solve(inst, o, Constraint::complete()).value);
  }
}

TEST(OracleTest, HugeValuesUseExactPath) {
  const Rational big = Rational(BigInt(1) << 90);
  const Instance inst = Instance::from_rows({{big, Rational(1, 3)}, {big, Rational(0)}});
  const OracleResult r = oracle_solve(inst, Objective::MinTotalEnvy, Constraint::complete());
  EXPECT_EQ(r.value, big - Rational(1, 3));
}

}  // namespace
}  // namespace fairhouse
