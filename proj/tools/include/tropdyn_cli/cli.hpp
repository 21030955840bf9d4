#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropdyn/dynamics.hpp"

namespace tropdyn::cli {

enum ExitCode : int {
  kOk = 0,
  kRuntimeFailure = 1,
  kInvalidInput = 2,
  kAssumptionViolation = 3,
  kMultipleClasses = 4,
  kOracleMismatch = 5,
};

/// Random system used by `gen`. A fixed seed gives the same system on every
/// platform: only the raw 64-bit output of std::mt19937_64 is used.
///
/// Default: n in [2, max_states] unless given, random arcs with integer weights in
/// [-5, 5] added until the graph is strongly connected.
/// Deterministic: a random map retried until every state has a preimage.
TransitionSystem random_system(std::uint64_t seed,
                               std::optional<std::size_t> n = std::nullopt,
                               bool deterministic = false,
                               std::size_t max_states = 12);

/// Probe vectors for ldp columns: zero, then `extra` integer vectors in
/// [-5, 5] drawn from `seed`.
std::vector<std::vector<double>> default_probes(std::size_t n, std::uint64_t seed,
                                                std::size_t extra = 3);

/// Runs the command line; writes to `out` when no --output is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropdyn::cli
