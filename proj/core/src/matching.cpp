#include "copsrob/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace copsrob {

namespace {

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

struct HopcroftKarp {
  const std::vector<std::vector<std::uint32_t>>& adj;
  BipartiteMatching& m;
  std::vector<std::uint32_t> layer;
  std::vector<std::size_t> cursor;

  bool bfs() {
    std::queue<std::uint32_t> q;
    bool found = false;
    for (std::uint32_t l = 0; l < adj.size(); ++l) {
      if (m.left_to_right[l] == kUnmatched) {
        layer[l] = 0;
        q.push(l);
      } else {
        layer[l] = kFar;
      }
    }
    while (!q.empty()) {
      const std::uint32_t l = q.front();
      q.pop();
      for (std::uint32_t r : adj[l]) {
        const std::uint32_t next = m.right_to_left[r];
        if (next == kUnmatched) {
          found = true;
        } else if (layer[next] == kFar) {
          layer[next] = layer[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t l) {
    for (std::size_t& i = cursor[l]; i < adj[l].size(); ++i) {
      const std::uint32_t r = adj[l][i];
      const std::uint32_t next = m.right_to_left[r];
      if (next == kUnmatched || (layer[next] == layer[l] + 1 && dfs(next))) {
        m.left_to_right[l] = r;
        m.right_to_left[r] = l;
        ++i;
        return true;
      }
    }
    layer[l] = kFar;
    return false;
  }
};

}  // namespace

BipartiteMatching hopcroft_karp(std::size_t right_count, const std::vector<std::vector<std::uint32_t>>& adjacency) {
  BipartiteMatching m;
  m.left_to_right.assign(adjacency.size(), kUnmatched);
  m.right_to_left.assign(right_count, kUnmatched);
  HopcroftKarp hk{adjacency, m, std::vector<std::uint32_t>(adjacency.size()), {}};
  while (hk.bfs()) {
    hk.cursor.assign(adjacency.size(), 0);
    for (std::uint32_t l = 0; l < adjacency.size(); ++l) {
      if (m.left_to_right[l] == kUnmatched && hk.dfs(l)) ++m.size;
    }
  }
  return m;
}

std::vector<std::uint32_t> hall_violator(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                         const BipartiteMatching& matching) {
  std::vector<bool> seen(adjacency.size(), false);
  std::queue<std::uint32_t> q;
  for (std::uint32_t l = 0; l < adjacency.size(); ++l) {
    if (matching.left_to_right[l] == kUnmatched) {
      seen[l] = true;
      q.push(l);
    }
  }
  if (q.empty()) return {};
  while (!q.empty()) {
    const std::uint32_t l = q.front();
    q.pop();
    for (std::uint32_t r : adjacency[l]) {
      const std::uint32_t next = matching.right_to_left[r];
      if (next != kUnmatched && !seen[next]) {
        seen[next] = true;
        q.push(next);
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t l = 0; l < adjacency.size(); ++l) {
    if (seen[l]) out.push_back(l);
  }
  return out;
}

}  // namespace copsrob
