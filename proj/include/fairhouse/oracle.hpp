#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fairhouse/core.hpp"

namespace fairhouse {

// Exhaustive reference solver. Every partial injective allocation is visited
// once, in lexicographic order of the assignment vector ("unassigned" before
// house 0), so the first optimum found is the lexicographically smallest.

enum class Objective {
  MaxSizeEf,         // largest envy-free allocation; infeasible if none
  MinNumEnvy,
  MinTotalEnvy,
  MinimaxTotalEnvy,  // smallest maximum per-agent total envy
};

struct Constraint {
  enum class Kind { None, MaxUsw, MaxEsw, Complete, SizeAtLeast };
  Kind kind = Kind::None;
  int k = 0;  // SizeAtLeast only

  static Constraint none() { return {Kind::None, 0}; }
  static Constraint max_usw() { return {Kind::MaxUsw, 0}; }
  static Constraint max_esw() { return {Kind::MaxEsw, 0}; }
  static Constraint complete() { return {Kind::Complete, 0}; }
  static Constraint size_at_least(int k) { return {Kind::SizeAtLeast, k}; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct OracleResult {
  // False when no allocation satisfies the constraint (or, for MaxSizeEf, no
  // allocation in the constraint set is envy-free). Other fields are then
  // zero / empty except `candidates`.
  bool feasible = false;
  // Size for MaxSizeEf, a count for MinNumEnvy, an amount of envy otherwise.
  Rational value{0};
  Allocation witness;
  std::uint64_t optimum_count = 0;
  std::uint64_t candidates = 0;
};

// sum_k C(n, k) * m! / (m - k)!
BigInt allocation_count(int agent_count, int house_count);

// Calls visit on every allocation in lexicographic order. Throws
// BudgetExceeded when allocation_count exceeds budget.
void enumerate_allocations(const Instance& inst,
                           const std::function<void(const Allocation&)>& visit,
                           std::uint64_t budget = kDefaultBudget);

std::vector<Allocation> all_allocations(const Instance& inst,
                                        std::uint64_t budget = kDefaultBudget);

OracleResult oracle_solve(const Instance& inst, Objective objective, Constraint constraint,
                          std::uint64_t budget = kDefaultBudget);

// Best (k, beta) over all allocations, compared lexicographically.
struct EswValue {
  int k = 0;
  Rational beta{0};
  friend bool operator==(const EswValue&, const EswValue&) = default;
};
EswValue oracle_max_esw(const Instance& inst, std::uint64_t budget = kDefaultBudget);

std::string to_string(Objective objective);
std::string to_string(const Constraint& constraint);

}  // namespace fairhouse
