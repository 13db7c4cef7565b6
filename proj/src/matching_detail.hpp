#pragma once

#include <deque>
#include <limits>
#include <vector>

namespace unigraph::detail {

struct BipartiteMatching {
  int size = 0;
  std::vector<int> left_to_right;
  std::vector<int> right_to_left;
};

// Hopcroft-Karp. Neighbour lists are scanned in the given order, so the
// witness matching is reproducible.
inline BipartiteMatching hopcroft_karp(int left, int right, const std::vector<std::vector<int>>& adj) {
  constexpr int kInf = std::numeric_limits<int>::max();
  BipartiteMatching m;
  m.left_to_right.assign(left, -1);
  m.right_to_left.assign(right, -1);
  std::vector<int> dist(left);

  auto bfs = [&] {
    std::deque<int> queue;
    bool found = false;
    for (int u = 0; u < left; ++u) {
      if (m.left_to_right[u] < 0) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        const int next = m.right_to_left[w];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> cursor(left);
  auto dfs = [&](auto&& self, int u) -> bool {
    for (; cursor[u] < adj[u].size(); ++cursor[u]) {
      const int w = adj[u][cursor[u]];
      const int next = m.right_to_left[w];
      if (next < 0 || (dist[next] == dist[u] + 1 && self(self, next))) {
        m.left_to_right[u] = w;
        m.right_to_left[w] = u;
        ++cursor[u];
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int u = 0; u < left; ++u)
      if (m.left_to_right[u] < 0 && dfs(dfs, u)) ++m.size;
  }
  return m;
}

}  // namespace unigraph::detail
