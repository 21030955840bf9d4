#include "tropdyn/reference.hpp"

#include <algorithm>
#include <limits>

namespace tropdyn::reference {

void for_each_simple_cycle(
    const TropMatrix& m,
    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = m.size();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  // Depth-first search restricted to states ≥ start, so every cycle is
  // reported exactly once, from its lowest state.
  std::function<void(std::size_t, std::size_t)> extend =
      [&](std::size_t start, std::size_t v) {
        for (std::size_t w = start; w < n; ++w) {
          if (!m(v, w).is_finite()) continue;
          if (w == start) {
            visit(path);
          } else if (!on_path[w]) {
            path.push_back(w);
            on_path[w] = true;
            extend(start, w);
            on_path[w] = false;
            path.pop_back();
          }
        }
      };

  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
}

TropValue max_cycle_mean(const TropMatrix& m) {
  TropValue best = kNegInf;
  for_each_simple_cycle(m, [&](const std::vector<std::size_t>& cycle) {
    double sum = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      sum += m(cycle[i], cycle[(i + 1) % cycle.size()]).value();
    best = std::max(best, TropValue{sum / static_cast<double>(cycle.size())});
  });
  return best;
}

TropMatrix max_walk_weights(const TropMatrix& m, std::size_t max_length) {
  const std::size_t n = m.size();
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  // exact[i][j]: best walk of exactly `len` steps.
  std::vector<std::vector<double>> exact(n, std::vector<double>(n, kNone));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) exact[i][j] = m(i, j).to_double();
  std::vector<std::vector<double>> best = exact;

  for (std::size_t len = 2; len <= max_length; ++len) {
    std::vector<std::vector<double>> next(n, std::vector<double>(n, kNone));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (exact[i][k] == kNone) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!m(k, j).is_finite()) continue;
          next[i][j] = std::max(next[i][j], exact[i][k] + m(k, j).value());
        }
      }
    exact = std::move(next);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) best[i][j] = std::max(best[i][j], exact[i][j]);
  }

  TropMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = TropValue{best[i][j]};
  return out;
}

}  // namespace tropdyn::reference
