#include "fairhouse/oracle.hpp"

#include <algorithm>

namespace fairhouse {
namespace {

// Depth-first walk over agents; `min_size` prunes branches that can no
// longer reach that many assigned agents.
template <typename Visit>
class Walker {
 public:
  Walker(int n, int m, int min_size, Visit& visit)
      : n_(n), m_(m), min_size_(min_size), visit_(visit), alloc_(n),
        used_(static_cast<std::size_t>(m), 0) {}

  void run() { step(0, 0); }

 private:
  void step(int agent, int assigned) {
    if (assigned + std::min(n_ - agent, m_ - assigned) < min_size_) return;
    if (agent == n_) {
      visit_(static_cast<const Allocation&>(alloc_));
      return;
    }
    step(agent + 1, assigned);
    for (int h = 0; h < m_; ++h) {
      auto& taken = used_[static_cast<std::size_t>(h)];
      if (taken) continue;
      taken = 1;
      alloc_.assign(agent, h);
      step(agent + 1, assigned + 1);
      alloc_.unassign(agent);
      taken = 0;
    }
  }

  int n_, m_, min_size_;
  Visit& visit_;
  Allocation alloc_;
  std::vector<char> used_;
};

template <typename Visit>
void walk(int n, int m, int min_size, Visit&& visit) {
  Walker<std::remove_reference_t<Visit>> w(n, m, min_size, visit);
  w.run();
}

void check_budget(const Instance& inst, std::uint64_t budget) {
  const BigInt count = allocation_count(inst.agent_count(), inst.house_count());
  if (count > BigInt(budget)) {
    throw BudgetExceeded("enumeration needs " + count.str() + " allocations, budget is " +
                         std::to_string(budget));
  }
}

template <typename Scalar>
struct Esw {
  int k = 0;
  Scalar beta{0};
  bool better_than(const Esw& other) const {
    return k != other.k ? k > other.k : beta > other.beta;
  }
  bool operator==(const Esw& other) const { return k == other.k && beta == other.beta; }
};

template <typename Scalar>
Esw<Scalar> esw_of(const ValueMatrix<Scalar>& values, const Allocation& alloc) {
  Esw<Scalar> out;
  for (int i = 0; i < alloc.agent_count(); ++i) {
    if (!alloc.is_assigned(i)) continue;
    const Scalar& v = values(i, alloc.house(i));
    if (!(v > Scalar(0))) continue;
    if (out.k == 0 || v < out.beta) out.beta = v;
    ++out.k;
  }
  return out;
}

template <typename Scalar>
Scalar usw_of(const ValueMatrix<Scalar>& values, const Allocation& alloc) {
  Scalar sum(0);
  for (int i = 0; i < alloc.agent_count(); ++i)
    if (alloc.is_assigned(i)) sum += values(i, alloc.house(i));
  return sum;
}

template <typename Scalar>
OracleResult solve(const ValueMatrix<Scalar>& values, const Rational& factor,
                   Objective objective, Constraint constraint) {
  const int n = static_cast<int>(values.rows());
  const int m = static_cast<int>(values.cols());
  OracleResult result;

  int min_size = 0;
  if (constraint.kind == Constraint::Kind::Complete) min_size = std::min(n, m);
  if (constraint.kind == Constraint::Kind::SizeAtLeast) min_size = constraint.k;
  if (min_size > std::min(n, m)) return result;

  Scalar best_usw(0);
  Esw<Scalar> best_esw;
  if (constraint.kind == Constraint::Kind::MaxUsw) {
    walk(n, m, 0, [&](const Allocation& a) {
      Scalar u = usw_of(values, a);
      if (u > best_usw) best_usw = u;
    });
  } else if (constraint.kind == Constraint::Kind::MaxEsw) {
    walk(n, m, 0, [&](const Allocation& a) {
      auto e = esw_of(values, a);
      if (e.better_than(best_esw)) best_esw = e;
    });
  }

  // Minimized score; MaxSizeEf minimizes -size over envy-free allocations.
  Scalar best(0);
  walk(n, m, min_size, [&](const Allocation& a) {
    ++result.candidates;
    if (constraint.kind == Constraint::Kind::MaxUsw && usw_of(values, a) != best_usw) return;
    if (constraint.kind == Constraint::Kind::MaxEsw && !(esw_of(values, a) == best_esw)) return;

    Scalar score(0);
    switch (objective) {
      case Objective::MaxSizeEf:
        if (!is_envy_free(values, a)) return;
        score = Scalar(-a.size());
        break;
      case Objective::MinNumEnvy:
        for (int i = 0; i < n; ++i) score += agent_total_envy(values, a, i) > Scalar(0) ? 1 : 0;
        break;
      case Objective::MinTotalEnvy:
        for (int i = 0; i < n; ++i) score += agent_total_envy(values, a, i);
        break;
      case Objective::MinimaxTotalEnvy:
        for (int i = 0; i < n; ++i) score = std::max(score, agent_total_envy(values, a, i));
        break;
    }
    if (!result.feasible || score < best) {
      result.feasible = true;
      best = score;
      result.witness = a;
      result.optimum_count = 1;
    } else if (score == best) {
      ++result.optimum_count;
    }
  });

  if (!result.feasible) return result;
  switch (objective) {
    case Objective::MaxSizeEf:
      result.value = -Rational(best);
      break;
    case Objective::MinNumEnvy:
      result.value = Rational(best);
      break;
    default:
      result.value = Rational(best) / factor;
  }
  return result;
}

// Entry bound keeping every sum the oracle forms (at most n * m terms) well
// inside int64.
std::int64_t narrow_limit(const Instance& inst) {
  const std::int64_t terms =
      static_cast<std::int64_t>(inst.agent_count()) * inst.house_count() + 1;
  return std::int64_t{1'000'000'000'000'000} / terms;
}

template <typename Fn>
auto on_scaled_values(const Instance& inst, Fn&& fn) {
  if (auto narrow = int64_values(inst, narrow_limit(inst))) return fn(narrow->values, narrow->factor);
  IntegralValues wide = integral_values(inst);
  return fn(wide.values, wide.factor);
}

}  // namespace

BigInt allocation_count(int agent_count, int house_count) {
  // sum_k C(n, k) P(m, k), built term by term.
  BigInt total = 0;
  BigInt term = 1;  // C(n, 0) P(m, 0)
  for (int k = 0; k <= std::min(agent_count, house_count); ++k) {
    total += term;
    term = term * (agent_count - k) * (house_count - k) / (k + 1);
  }
  return total;
}

void enumerate_allocations(const Instance& inst,
                           const std::function<void(const Allocation&)>& visit,
                           std::uint64_t budget) {
  check_budget(inst, budget);
  walk(inst.agent_count(), inst.house_count(), 0, visit);
}

std::vector<Allocation> all_allocations(const Instance& inst, std::uint64_t budget) {
  std::vector<Allocation> out;
  enumerate_allocations(inst, [&](const Allocation& a) { out.push_back(a); }, budget);
  return out;
}

OracleResult oracle_solve(const Instance& inst, Objective objective, Constraint constraint,
                          std::uint64_t budget) {
  if (constraint.kind == Constraint::Kind::SizeAtLeast && constraint.k < 0)
    throw std::invalid_argument("size constraint must be non-negative");
  check_budget(inst, budget);
  return on_scaled_values(inst, [&](const auto& values, const Rational& factor) {
    return solve(values, factor, objective, constraint);
  });
}

EswValue oracle_max_esw(const Instance& inst, std::uint64_t budget) {
  check_budget(inst, budget);
  return on_scaled_values(inst, [&](const auto& values, const Rational& factor) {
    using Scalar = typename std::decay_t<decltype(values)>::Scalar;
    Esw<Scalar> best;
    walk(inst.agent_count(), inst.house_count(), 0, [&](const Allocation& a) {
      auto e = esw_of(values, a);
      if (e.better_than(best)) best = e;
    });
    return EswValue{best.k, Rational(best.beta) / factor};
  });
}

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::MaxSizeEf: return "max-size-ef";
    case Objective::MinNumEnvy: return "min-num-envy";
    case Objective::MinTotalEnvy: return "min-total-envy";
    case Objective::MinimaxTotalEnvy: return "minimax-total-envy";
  }
  return "?";
}

std::string to_string(const Constraint& constraint) {
  switch (constraint.kind) {
    case Constraint::Kind::None: return "none";
    case Constraint::Kind::MaxUsw: return "max-usw";
    case Constraint::Kind::MaxEsw: return "max-esw";
    case Constraint::Kind::Complete: return "complete";
    case Constraint::Kind::SizeAtLeast: return "size>=" + std::to_string(constraint.k);
  }
  return "?";
}

}  // namespace fairhouse
