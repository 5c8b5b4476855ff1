#include "fairhouse/matching.hpp"

#include <deque>
#include <stdexcept>

namespace fairhouse {

BipartiteGraph::BipartiteGraph(int left_count, int right_count)
    : left_count_(left_count),
      right_count_(right_count),
      adjacency_(static_cast<std::size_t>(left_count)),
      present_(static_cast<std::size_t>(left_count) * static_cast<std::size_t>(right_count), 0) {
  if (left_count < 0 || right_count < 0)
    throw std::invalid_argument("bipartite graph sides must be non-negative");
}

void BipartiteGraph::add_edge(int left, int right) {
  if (left < 0 || left >= left_count_ || right < 0 || right >= right_count_) {
    throw std::out_of_range("edge (" + std::to_string(left) + ", " + std::to_string(right) +
                            ") outside a " + std::to_string(left_count_) + "x" +
                            std::to_string(right_count_) + " graph");
  }
  auto& flag = present_[index(left, right)];
  if (flag) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(left) + ", " +
                                std::to_string(right) + ")");
  }
  flag = 1;
  auto& adj = adjacency_[static_cast<std::size_t>(left)];
  adj.insert(std::upper_bound(adj.begin(), adj.end(), right), right);
  ++edge_count_;
}

std::vector<int> Matching::left_partners(int left_count) const {
  std::vector<int> out(static_cast<std::size_t>(left_count), kUnassigned);
  for (auto [l, r] : pairs) out[static_cast<std::size_t>(l)] = r;
  return out;
}

namespace {

struct KuhnState {
  const BipartiteGraph& g;
  std::vector<int> right_to_left;
  std::vector<char> visited;

  bool augment(int l) {
    for (int r : g.neighbors(l)) {
      auto& seen = visited[static_cast<std::size_t>(r)];
      if (seen) continue;
      seen = 1;
      int& owner = right_to_left[static_cast<std::size_t>(r)];
      if (owner == kUnassigned || augment(owner)) {
        owner = l;
        return true;
      }
    }
    return false;
  }
};

std::vector<int> maximum_right_to_left(const BipartiteGraph& g) {
  KuhnState state{g, std::vector<int>(static_cast<std::size_t>(g.right_count()), kUnassigned),
                  std::vector<char>(static_cast<std::size_t>(g.right_count()), 0)};
  for (int l = 0; l < g.left_count(); ++l) {
    std::fill(state.visited.begin(), state.visited.end(), 0);
    state.augment(l);
  }
  return state.right_to_left;
}

Matching to_matching(const std::vector<int>& right_to_left) {
  Matching m;
  for (std::size_t r = 0; r < right_to_left.size(); ++r)
    if (right_to_left[r] != kUnassigned) m.pairs.emplace_back(right_to_left[r], static_cast<int>(r));
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace

Matching max_cardinality_matching(const BipartiteGraph& g) {
  return to_matching(maximum_right_to_left(g));
}

std::optional<HallViolator> find_minimal_hall_violator(const BipartiteGraph& g) {
  const Matching m = max_cardinality_matching(g);
  const std::vector<int> partner = m.left_partners(g.left_count());

  int root = kUnassigned;
  for (int l = 0; l < g.left_count(); ++l) {
    if (partner[static_cast<std::size_t>(l)] == kUnassigned && !g.neighbors(l).empty()) {
      root = l;
      break;
    }
  }
  if (root == kUnassigned) return std::nullopt;

  std::vector<int> right_owner(static_cast<std::size_t>(g.right_count()), kUnassigned);
  for (auto [l, r] : m.pairs) right_owner[static_cast<std::size_t>(r)] = l;

  // Alternating BFS: non-matching edges left -> right, matching edges back.
  // Every reached right vertex is matched, otherwise m would not be maximum.
  std::vector<char> left_seen(static_cast<std::size_t>(g.left_count()), 0);
  std::vector<char> right_seen(static_cast<std::size_t>(g.right_count()), 0);
  std::deque<int> queue{root};
  left_seen[static_cast<std::size_t>(root)] = 1;
  while (!queue.empty()) {
    int l = queue.front();
    queue.pop_front();
    for (int r : g.neighbors(l)) {
      if (right_seen[static_cast<std::size_t>(r)]) continue;
      right_seen[static_cast<std::size_t>(r)] = 1;
      int next = right_owner[static_cast<std::size_t>(r)];
      if (next != kUnassigned && !left_seen[static_cast<std::size_t>(next)]) {
        left_seen[static_cast<std::size_t>(next)] = 1;
        queue.push_back(next);
      }
    }
  }

  HallViolator out;
  for (int l = 0; l < g.left_count(); ++l)
    if (left_seen[static_cast<std::size_t>(l)]) out.agents.push_back(l);
  for (int r = 0; r < g.right_count(); ++r)
    if (right_seen[static_cast<std::size_t>(r)]) out.houses.push_back(r);
  return out;
}

Allocation max_size_allocation(const BipartiteGraph& g, std::span<const int> house_ids,
                               int agent_count) {
  if (house_ids.size() != static_cast<std::size_t>(g.right_count()))
    throw std::invalid_argument("house_ids must name every right vertex");
  if (agent_count != g.left_count())
    throw std::invalid_argument("agent_count must equal the number of left vertices");

  const std::vector<int> right_to_left = maximum_right_to_left(g);
  Allocation alloc(agent_count);
  std::vector<char> right_used(right_to_left.size(), 0);
  for (std::size_t r = 0; r < right_to_left.size(); ++r) {
    if (right_to_left[r] == kUnassigned) continue;
    alloc.assign(right_to_left[r], house_ids[r]);
    right_used[r] = 1;
  }
  // Unmatched agents and unmatched houses are never adjacent in g (the
  // matching is maximum), so the complement graph between them is complete.
  std::size_t r = 0;
  for (int l = 0; l < agent_count; ++l) {
    if (alloc.is_assigned(l)) continue;
    while (r < right_used.size() && right_used[r]) ++r;
    if (r == right_used.size()) break;
    alloc.assign(l, house_ids[r]);
    right_used[r] = 1;
  }
  return alloc;
}

Allocation max_size_allocation(const BipartiteGraph& g) {
  std::vector<int> ids(static_cast<std::size_t>(g.right_count()));
  for (int r = 0; r < g.right_count(); ++r) ids[static_cast<std::size_t>(r)] = r;
  return max_size_allocation(g, ids, g.left_count());
}

}  // namespace fairhouse
