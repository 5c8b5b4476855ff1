#include "fairhouse/solvers_ef.hpp"

#include "fairhouse/solvers_usw.hpp"

namespace fairhouse {

EnvyFreeResult max_size_envy_free(const Instance& inst) {
  return max_size_envy_free(inst.values);
}

std::optional<Allocation> max_usw_envy_free(const Instance& inst) {
  EnvyFreeResult ef = max_size_envy_free(inst);
  if (evaluate(inst.values, ef.allocation).usw != max_utilitarian_welfare(inst))
    return std::nullopt;
  return std::move(ef.allocation);
}

Allocation max_size_envy_free_binary(const Instance& inst) {
  if (!is_binary(inst))
    throw PreconditionError("max_size_envy_free_binary requires 0/1 valuations");
  const int n = inst.agent_count();
  const int m = inst.house_count();

  // Envy-free matching: drop violator neighborhoods from the liked graph
  // until every agent that still likes something can be matched.
  std::vector<int> remaining(static_cast<std::size_t>(m));
  for (int h = 0; h < m; ++h) remaining[static_cast<std::size_t>(h)] = h;
  Matching matching;
  while (true) {
    BipartiteGraph liked(n, static_cast<int>(remaining.size()));
    for (int i = 0; i < n; ++i)
      for (std::size_t r = 0; r < remaining.size(); ++r)
        if (inst.value(i, remaining[r]) == 1) liked.add_edge(i, static_cast<int>(r));
    auto violator = find_minimal_hall_violator(liked);
    if (!violator) {
      matching = max_cardinality_matching(liked);
      break;
    }
    std::vector<char> drop(remaining.size(), 0);
    for (int r : violator->houses) drop[static_cast<std::size_t>(r)] = 1;
    std::vector<int> kept;
    for (std::size_t r = 0; r < remaining.size(); ++r)
      if (!drop[r]) kept.push_back(remaining[r]);
    remaining = std::move(kept);
  }

  Allocation alloc(n);
  std::vector<char> matched_agent(static_cast<std::size_t>(n), 0);
  std::vector<char> house_taken(static_cast<std::size_t>(m), 0);
  for (auto [i, r] : matching.pairs) {
    const int h = remaining[static_cast<std::size_t>(r)];
    alloc.assign(i, h);
    matched_agent[static_cast<std::size_t>(i)] = 1;
    house_taken[static_cast<std::size_t>(h)] = 1;
  }

  // A free house may go to anyone once every agent who likes it holds a
  // liked house.
  int next_agent = 0;
  for (int h = 0; h < m; ++h) {
    if (house_taken[static_cast<std::size_t>(h)]) continue;
    bool admirers_matched = true;
    for (int i = 0; i < n && admirers_matched; ++i)
      if (inst.value(i, h) == 1 && !matched_agent[static_cast<std::size_t>(i)])
        admirers_matched = false;
    if (!admirers_matched) continue;
    while (next_agent < n && alloc.is_assigned(next_agent)) ++next_agent;
    if (next_agent == n) break;
    alloc.assign(next_agent, h);
    house_taken[static_cast<std::size_t>(h)] = 1;
  }
  return alloc;
}

}  // namespace fairhouse
