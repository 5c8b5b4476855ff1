#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fairhouse/errors.hpp"
#include "fairhouse/rational.hpp"

namespace fairhouse {

// Row i holds agent i's value for every house.
template <typename Scalar>
using ValueMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kUnassigned = -1;

// Partial injective map from agents to houses. Entry i is a house index or
// kUnassigned. Ordering is lexicographic on the entries with "unassigned"
// sorting before every house.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(int agent_count)
      : assignment_(static_cast<std::size_t>(agent_count), kUnassigned) {}
  explicit Allocation(std::vector<int> assignment)
      : assignment_(std::move(assignment)) {}

  static Allocation from_pairs(int agent_count,
                               const std::vector<std::pair<int, int>>& pairs) {
    Allocation out(agent_count);
    for (auto [agent, house] : pairs) out.assign(agent, house);
    return out;
  }

  int agent_count() const { return static_cast<int>(assignment_.size()); }
  int house(int agent) const { return assignment_[static_cast<std::size_t>(agent)]; }
  bool is_assigned(int agent) const { return house(agent) != kUnassigned; }
  void assign(int agent, int house) { assignment_[static_cast<std::size_t>(agent)] = house; }
  void unassign(int agent) { assign(agent, kUnassigned); }

  int size() const {
    int count = 0;
    for (int h : assignment_) count += h != kUnassigned;
    return count;
  }

  const std::vector<int>& assignment() const { return assignment_; }

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<int> assignment_;
};

// Throws InvalidAllocation unless the allocation has one entry per agent,
// every house index is in [0, house_count) and no house is used twice.
void validate_allocation(const Allocation& alloc, int agent_count,
                         int house_count);

struct Instance {
  ValueMatrix<Rational> values;
  std::vector<std::string> agent_labels;
  std::vector<std::string> house_labels;

  Instance() = default;
  // Validates: at least one agent and one house, all values >= 0, label
  // counts equal to the dimension they name (or empty).
  explicit Instance(ValueMatrix<Rational> v,
                    std::vector<std::string> agents = {},
                    std::vector<std::string> houses = {});

  static Instance from_rows(const std::vector<std::vector<Rational>>& rows);

  int agent_count() const { return static_cast<int>(values.rows()); }
  int house_count() const { return static_cast<int>(values.cols()); }
  const Rational& value(int agent, int house) const { return values(agent, house); }

  std::string agent_name(int agent) const;
  std::string house_name(int house) const;
};

bool is_binary(const Instance& inst);

// Values multiplied by the LCM of all denominators; every positive entry of
// the result is an integer >= 1. `factor` is that LCM.
struct IntegralValues {
  ValueMatrix<Rational> values;
  Rational factor;
};
IntegralValues integral_values(const Instance& inst);

// As integral_values, narrowed to int64 when every entry satisfies
// |v| <= limit. Returns nullopt otherwise.
struct Int64Values {
  ValueMatrix<std::int64_t> values;
  Rational factor;
};
std::optional<Int64Values> int64_values(const Instance& inst,
                                        std::int64_t limit);

template <typename Scalar>
struct BasicEnvyReport {
  std::vector<Scalar> per_agent_envy;
  std::vector<bool> envious_flags;
  int num_envious = 0;
  Scalar total_envy{0};
  Scalar max_agent_envy{0};
  Scalar usw{0};
  // ESW as (k, beta): k agents receive positive value, beta is the least of
  // those values. (0, 0) when no agent receives positive value.
  int esw_k = 0;
  Scalar esw_beta{0};
  int size = 0;
};

using EnvyReport = BasicEnvyReport<Rational>;

// ---------------------------------------------------------------------------
// Scalar-generic kernels. Inputs are assumed valid; the Instance overloads
// below check indices and allocation structure first.

template <typename Scalar>
Scalar assigned_value(const ValueMatrix<Scalar>& values, const Allocation& alloc,
                      int agent) {
  int h = alloc.house(agent);
  return h == kUnassigned ? Scalar(0) : values(agent, h);
}

template <typename Scalar>
Scalar pairwise_envy(const ValueMatrix<Scalar>& values, const Allocation& alloc,
                     int i, int j) {
  int other = alloc.house(j);
  if (i == j || other == kUnassigned) return Scalar(0);
  Scalar diff = values(i, other) - assigned_value(values, alloc, i);
  return diff > Scalar(0) ? diff : Scalar(0);
}

template <typename Scalar>
Scalar agent_total_envy(const ValueMatrix<Scalar>& values,
                        const Allocation& alloc, int i) {
  Scalar own = assigned_value(values, alloc, i);
  Scalar sum(0);
  for (int j = 0; j < alloc.agent_count(); ++j) {
    int other = alloc.house(j);
    if (j == i || other == kUnassigned) continue;
    if (values(i, other) > own) sum += values(i, other) - own;
  }
  return sum;
}

template <typename Scalar>
BasicEnvyReport<Scalar> evaluate(const ValueMatrix<Scalar>& values,
                                 const Allocation& alloc) {
  const int n = alloc.agent_count();
  BasicEnvyReport<Scalar> report;
  report.per_agent_envy.reserve(static_cast<std::size_t>(n));
  report.envious_flags.reserve(static_cast<std::size_t>(n));
  bool have_positive = false;
  for (int i = 0; i < n; ++i) {
    Scalar envy = agent_total_envy(values, alloc, i);
    bool envious = envy > Scalar(0);
    report.num_envious += envious;
    report.total_envy += envy;
    if (envy > report.max_agent_envy) report.max_agent_envy = envy;
    report.per_agent_envy.push_back(std::move(envy));
    report.envious_flags.push_back(envious);

    if (!alloc.is_assigned(i)) continue;
    ++report.size;
    const Scalar& own = values(i, alloc.house(i));
    report.usw += own;
    if (own > Scalar(0)) {
      ++report.esw_k;
      if (!have_positive || own < report.esw_beta) report.esw_beta = own;
      have_positive = true;
    }
  }
  return report;
}

template <typename Scalar>
bool is_envy_free(const ValueMatrix<Scalar>& values, const Allocation& alloc) {
  for (int i = 0; i < alloc.agent_count(); ++i) {
    Scalar own = assigned_value(values, alloc, i);
    for (int j = 0; j < alloc.agent_count(); ++j) {
      int other = alloc.house(j);
      if (j != i && other != kUnassigned && values(i, other) > own) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Checked entry points on Instance.

Rational pairwise_envy(const Instance& inst, const Allocation& alloc, int i, int j);
Rational agent_total_envy(const Instance& inst, const Allocation& alloc, int i);
EnvyReport evaluate(const Instance& inst, const Allocation& alloc);
bool is_envy_free(const Instance& inst, const Allocation& alloc);

// Agent-saturating when m >= n, house-saturating when m < n.
bool is_complete(const Instance& inst, const Allocation& alloc);

// Maps an EnvyReport computed on values scaled by `factor` back to the
// original scale. Counts are unaffected.
EnvyReport unscale(const EnvyReport& report, const Rational& factor);

}  // namespace fairhouse
