#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fairhouse/core.hpp"
#include "fairhouse/matching.hpp"

namespace fairhouse {

struct EnvyFreeResult {
  Allocation allocation;
  // Houses removed as the neighborhood of a Hall violator, in deletion order.
  // None of them belongs to any envy-free allocation.
  std::vector<int> deleted_houses;
};

// Top-choice graph over the houses still in play: agent i is joined to every
// remaining house it values at its positive maximum over the remaining
// houses. Right vertex r stands for remaining[r].
template <typename Scalar>
BipartiteGraph top_choice_graph(const ValueMatrix<Scalar>& values,
                                const std::vector<int>& remaining) {
  const int n = static_cast<int>(values.rows());
  BipartiteGraph g(n, static_cast<int>(remaining.size()));
  for (int i = 0; i < n; ++i) {
    Scalar best(0);
    for (int h : remaining)
      if (values(i, h) > best) best = values(i, h);
    if (!(best > Scalar(0))) continue;
    for (std::size_t r = 0; r < remaining.size(); ++r)
      if (values(i, remaining[r]) == best) g.add_edge(i, static_cast<int>(r));
  }
  return g;
}

// Maximum-size envy-free allocation. While the top-choice graph over the
// remaining houses has a Hall violator, the violator's houses are deleted;
// the result is then a maximum-size allocation of the final graph.
template <typename Scalar>
EnvyFreeResult max_size_envy_free(const ValueMatrix<Scalar>& values) {
  const int n = static_cast<int>(values.rows());
  const int m = static_cast<int>(values.cols());
  std::vector<int> remaining(static_cast<std::size_t>(m));
  for (int h = 0; h < m; ++h) remaining[static_cast<std::size_t>(h)] = h;

  EnvyFreeResult result;
  while (true) {
    BipartiteGraph g = top_choice_graph(values, remaining);
    auto violator = find_minimal_hall_violator(g);
    if (!violator) {
      result.allocation = max_size_allocation(g, remaining, n);
      break;
    }
    std::vector<char> drop(remaining.size(), 0);
    for (int r : violator->houses) {
      drop[static_cast<std::size_t>(r)] = 1;
      result.deleted_houses.push_back(remaining[static_cast<std::size_t>(r)]);
    }
    std::vector<int> kept;
    for (std::size_t r = 0; r < remaining.size(); ++r)
      if (!drop[r]) kept.push_back(remaining[r]);
    remaining = std::move(kept);
  }

  // Agents left out of the top-choice matching value every remaining house
  // at zero, so the complement pairing must hand out zero-valued houses only.
  for (int i = 0; i < n; ++i) {
    int h = result.allocation.house(i);
    if (h == kUnassigned) continue;
    Scalar best(0);
    for (int x : remaining)
      if (values(i, x) > best) best = values(i, x);
    if (values(i, h) != best)
      throw std::logic_error("max_size_envy_free: agent " + std::to_string(i) +
                             " received a non-top house");
  }
  return result;
}

EnvyFreeResult max_size_envy_free(const Instance& inst);

// Envy-free allocation of maximum utilitarian welfare, or nullopt when no
// envy-free allocation reaches the unconstrained maximum welfare.
std::optional<Allocation> max_usw_envy_free(const Instance& inst);

// Binary-valuation procedure: an envy-free matching on the liked-edges graph
// (iterated Hall-violator deletion), then every house all of whose admirers
// are matched is handed to an unassigned agent. Throws PreconditionError on
// non-binary instances.
Allocation max_size_envy_free_binary(const Instance& inst);

}  // namespace fairhouse
