#pragma once

// Brute-force reference computations used to cross-check the fast paths:
// explicit simple-cycle enumeration and walk-length dynamic programming.
// Exponential in the worst case; meant for n ≤ 10.

#include <cstddef>
#include <functional>
#include <vector>

#include "tropdyn/maxplus.hpp"

namespace tropdyn::reference {

/// Calls `visit` once per simple cycle (listed from its lowest state).
void for_each_simple_cycle(
    const TropMatrix& m,
    const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Maximum of (cycle weight / cycle length) over all simple cycles, -inf if
/// there is none.
TropValue max_cycle_mean(const TropMatrix& m);

/// W(i, j) = max weight over walks i -> j with 1 ≤ length ≤ max_length.
TropMatrix max_walk_weights(const TropMatrix& m, std::size_t max_length);

}  // namespace tropdyn::reference
