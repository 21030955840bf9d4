#include "tropdyn/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace tropdyn {

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Adjacency& out) {
  const std::size_t n = out.size();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      const std::size_t v = f.node;
      if (f.next_edge < out[v].size()) {
        const std::size_t w = out[v][f.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<std::size_t> shortest_cycle_through(const Adjacency& out,
                                                std::size_t start) {
  const std::size_t n = out.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    std::vector<std::size_t> succ = out[v];
    std::sort(succ.begin(), succ.end());
    for (std::size_t w : succ) {
      if (w == start) {
        std::vector<std::size_t> cycle;
        for (std::size_t x = v; x != kNone; x = parent[x]) cycle.push_back(x);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::size_t cyclicity(const Adjacency& out,
                      const std::vector<std::size_t>& members) {
  if (members.empty()) return 0;
  const std::size_t n = out.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<bool> member(n, false);
  for (std::size_t m : members) member[m] = true;

  std::vector<std::size_t> level(n, kNone);
  std::deque<std::size_t> queue{members.front()};
  level[members.front()] = 0;
  std::size_t g = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : out[v]) {
      if (!member[w]) continue;
      if (level[w] == kNone) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      } else {
        const auto diff = static_cast<long long>(level[v]) + 1 -
                          static_cast<long long>(level[w]);
        g = std::gcd(g, static_cast<std::size_t>(diff < 0 ? -diff : diff));
      }
    }
  }
  return g;
}

}  // namespace tropdyn
