#pragma once

#include <cstddef>
#include <vector>

namespace tropdyn {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Strongly connected components (Tarjan, iterative). Each component is
/// sorted ascending and components are ordered by their smallest member.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Adjacency& out);

/// Shortest cycle through `start` using only the arcs in `out`, as the list
/// of visited states starting at `start` (without repeating it). Ties are
/// broken by visiting successors in ascending order. Empty when no cycle
/// passes through `start`.
std::vector<std::size_t> shortest_cycle_through(const Adjacency& out,
                                                std::size_t start);

/// gcd of the cycle lengths of a strongly connected subgraph given by
/// `out` restricted to `members`. 0 when the subgraph has no arc.
std::size_t cyclicity(const Adjacency& out,
                      const std::vector<std::size_t>& members);

}  // namespace tropdyn
