#pragma once

#include <limits>
#include <vector>

namespace kegraph::detail {

/// Hopcroft-Karp on left vertices 0..left_count-1 and right vertices
/// 0..right_count-1. `right_neighbors(u)` yields the right ids adjacent to
/// left vertex u. Fills mate_left / mate_right (-1 when exposed) and returns
/// the matching size.
template <typename Neighbors>
int hopcroft_karp(int left_count, int right_count, Neighbors&& right_neighbors,
                  std::vector<int>& mate_left, std::vector<int>& mate_right) {
  constexpr int kInf = std::numeric_limits<int>::max();
  mate_left.assign(static_cast<std::size_t>(left_count), -1);
  mate_right.assign(static_cast<std::size_t>(right_count), -1);
  std::vector<int> dist(static_cast<std::size_t>(left_count));
  std::vector<int> queue(static_cast<std::size_t>(left_count));
  std::vector<std::size_t> cursor(static_cast<std::size_t>(left_count));

  const auto bfs = [&]() {
    int head = 0;
    int tail = 0;
    bool found = false;
    for (int u = 0; u < left_count; ++u) {
      if (mate_left[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        queue[static_cast<std::size_t>(tail++)] = u;
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    while (head < tail) {
      const int u = queue[static_cast<std::size_t>(head++)];
      for (int r : right_neighbors(u)) {
        const int w = mate_right[static_cast<std::size_t>(r)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue[static_cast<std::size_t>(tail++)] = w;
        }
      }
    }
    return found;
  };

  const auto dfs = [&](auto&& self, int u) -> bool {
    auto&& nbrs = right_neighbors(u);
    auto it = nbrs.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(cursor[static_cast<std::size_t>(u)]));
    for (; it != nbrs.end(); ++it, ++cursor[static_cast<std::size_t>(u)]) {
      const int r = *it;
      const int w = mate_right[static_cast<std::size_t>(r)];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 &&
                    self(self, w))) {
        mate_left[static_cast<std::size_t>(u)] = r;
        mate_right[static_cast<std::size_t>(r)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  };

  int size = 0;
  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int u = 0; u < left_count; ++u) {
      if (mate_left[static_cast<std::size_t>(u)] < 0 && dfs(dfs, u)) ++size;
    }
  }
  return size;
}

}  // namespace kegraph::detail
