#include "fairhouse/core.hpp"

#include <string>

namespace fairhouse {

void validate_allocation(const Allocation& alloc, int agent_count,
                         int house_count) {
  if (alloc.agent_count() != agent_count) {
    throw InvalidAllocation("allocation has " + std::to_string(alloc.agent_count()) +
                            " agents, instance has " + std::to_string(agent_count));
  }
  std::vector<int> owner(static_cast<std::size_t>(house_count), kUnassigned);
  for (int i = 0; i < agent_count; ++i) {
    int h = alloc.house(i);
    if (h == kUnassigned) continue;
    if (h < 0 || h >= house_count) {
      throw InvalidAllocation("agent " + std::to_string(i) + " holds house " +
                              std::to_string(h) + " out of range [0, " +
                              std::to_string(house_count) + ")");
    }
    auto& slot = owner[static_cast<std::size_t>(h)];
    if (slot != kUnassigned) {
      throw InvalidAllocation("house " + std::to_string(h) + " assigned to agents " +
                              std::to_string(slot) + " and " + std::to_string(i));
    }
    slot = i;
  }
}

Instance::Instance(ValueMatrix<Rational> v, std::vector<std::string> agents,
                   std::vector<std::string> houses)
    : values(std::move(v)),
      agent_labels(std::move(agents)),
      house_labels(std::move(houses)) {
  if (values.rows() < 1) throw ValidationError("instance needs at least one agent");
  if (values.cols() < 1) throw ValidationError("instance needs at least one house");
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index h = 0; h < values.cols(); ++h) {
      if (values(i, h) < 0) {
        throw ValidationError("value for agent " + std::to_string(i) + ", house " +
                              std::to_string(h) + " is negative");
      }
    }
  }
  if (!agent_labels.empty() &&
      agent_labels.size() != static_cast<std::size_t>(values.rows())) {
    throw ValidationError("agent_labels has " + std::to_string(agent_labels.size()) +
                          " entries, expected " + std::to_string(values.rows()));
  }
  if (!house_labels.empty() &&
      house_labels.size() != static_cast<std::size_t>(values.cols())) {
    throw ValidationError("house_labels has " + std::to_string(house_labels.size()) +
                          " entries, expected " + std::to_string(values.cols()));
  }
}

Instance Instance::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw ValidationError("instance needs at least one agent");
  const auto m = rows.front().size();
  ValueMatrix<Rational> v(static_cast<Eigen::Index>(rows.size()),
                          static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m) {
      throw ValidationError("row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " values, expected " +
                            std::to_string(m));
    }
    for (std::size_t h = 0; h < m; ++h)
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(h)) = rows[i][h];
  }
  return Instance(std::move(v));
}

std::string Instance::agent_name(int agent) const {
  if (!agent_labels.empty()) return agent_labels[static_cast<std::size_t>(agent)];
  return "a" + std::to_string(agent + 1);
}

std::string Instance::house_name(int house) const {
  if (!house_labels.empty()) return house_labels[static_cast<std::size_t>(house)];
  return "h" + std::to_string(house + 1);
}

bool is_binary(const Instance& inst) {
  for (Eigen::Index k = 0; k < inst.values.size(); ++k) {
    const Rational& x = inst.values.data()[k];
    if (x != 0 && x != 1) return false;
  }
  return true;
}

IntegralValues integral_values(const Instance& inst) {
  const Rational* data = inst.values.data();
  Rational factor(lcm_of_denominators(data, data + inst.values.size()));
  ValueMatrix<Rational> scaled = inst.values;
  for (Eigen::Index k = 0; k < scaled.size(); ++k) scaled.data()[k] *= factor;
  return {std::move(scaled), factor};
}

std::optional<Int64Values> int64_values(const Instance& inst, std::int64_t limit) {
  IntegralValues integral = integral_values(inst);
  ValueMatrix<std::int64_t> out(integral.values.rows(), integral.values.cols());
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    auto narrowed = to_int64(integral.values.data()[k]);
    if (!narrowed || *narrowed > limit) return std::nullopt;
    out.data()[k] = *narrowed;
  }
  return Int64Values{std::move(out), integral.factor};
}

namespace {

void check_agent(const Instance& inst, int agent) {
  if (agent < 0 || agent >= inst.agent_count()) {
    throw std::out_of_range("agent index " + std::to_string(agent) +
                            " out of range [0, " + std::to_string(inst.agent_count()) +
                            ")");
  }
}

}  // namespace

Rational pairwise_envy(const Instance& inst, const Allocation& alloc, int i, int j) {
  check_agent(inst, i);
  check_agent(inst, j);
  validate_allocation(alloc, inst.agent_count(), inst.house_count());
  return pairwise_envy(inst.values, alloc, i, j);
}

Rational agent_total_envy(const Instance& inst, const Allocation& alloc, int i) {
  check_agent(inst, i);
  validate_allocation(alloc, inst.agent_count(), inst.house_count());
  return agent_total_envy(inst.values, alloc, i);
}

EnvyReport evaluate(const Instance& inst, const Allocation& alloc) {
  validate_allocation(alloc, inst.agent_count(), inst.house_count());
  return evaluate(inst.values, alloc);
}

bool is_envy_free(const Instance& inst, const Allocation& alloc) {
  validate_allocation(alloc, inst.agent_count(), inst.house_count());
  return is_envy_free(inst.values, alloc);
}

bool is_complete(const Instance& inst, const Allocation& alloc) {
  const int n = inst.agent_count();
  const int m = inst.house_count();
  return alloc.size() == (m >= n ? n : m);
}

EnvyReport unscale(const EnvyReport& report, const Rational& factor) {
  EnvyReport out = report;
  for (auto& e : out.per_agent_envy) e /= factor;
  out.total_envy /= factor;
  out.max_agent_envy /= factor;
  out.usw /= factor;
  out.esw_beta /= factor;
  return out;
}

}  // namespace fairhouse
