#pragma once

// Ergodic optimization on finite systems: maximal potential energy,
// Mañé potential, Aubry set, calibrated sub-actions (tropical
// eigenfunctions) and tropical eigen-densities.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropdyn/dynamics.hpp"
#include "tropdyn/maxplus.hpp"
#include "tropdyn/measures.hpp"
#include "tropdyn/tropical.hpp"

namespace tropdyn {

struct ManeMatrix {
  /// phi(x, y): largest normalized Birkhoff sum over paths x -> y of
  /// length ≥ 1; -inf when y is unreachable from x.
  TropMatrix phi;
  /// { x : |phi(x, x)| ≤ tol }
  std::vector<std::size_t> aubry;
  /// Strongly connected pieces of the critical graph, ordered by their
  /// lowest state. Their union is the Aubry set.
  std::vector<std::vector<std::size_t>> critical_classes;

  friend bool operator==(const ManeMatrix&, const ManeMatrix&) = default;
};

struct EnergyResult {
  double q;
  PathRecord witness;  ///< closed maximizing cycle
};

struct ErgodicReport {
  double q = 0.0;
  PathRecord maximizing_cycle;
  TransitionSystem normalized_system;
  ManeMatrix mane;
  std::vector<TropVector> eigenfunction_basis;
  std::vector<Density> eigen_density_basis;
  bool uniquely_calibrated = false;
  double tol = kDefaultTol;

  friend bool operator==(const ErgodicReport&, const ErgodicReport&) = default;
};

/// Q(T, A) as the maximum cycle mean, with a maximizing cycle. Throws
/// AssumptionViolation when the system has no cycle.
EnergyResult max_potential_energy(const TransitionSystem& sys,
                                  double tol = kDefaultTol);

/// Ā = A - Q on every arc.
TransitionSystem normalize(const TransitionSystem& sys,
                           double tol = kDefaultTol);

/// Requires a normalized system (PositiveCycleError otherwise).
ManeMatrix mane_potential(const TransitionSystem& normalized,
                          double tol = kDefaultTol);

struct LimsupOptions {
  /// Iteration cap; 0 selects max(4n², 4·window).
  std::size_t cap = 0;
  /// Window of the running supremum; 0 selects max(n, lcm of the critical
  /// class cyclicities), which covers the eventual period of the iterates.
  std::size_t window = 0;
  double tol = kDefaultTol;
};

/// limsup_k L^k(u0) for a normalized system: iterates the Bousch operator,
/// tracks the supremum over a sliding window, and stops once that supremum
/// repeats after one full window and is a fixed point of L. Throws
/// ConvergenceError if this does not happen within the cap.
TropVector subaction_limsup(const TransitionSystem& normalized,
                            std::span<const TropValue> u0,
                            const LimsupOptions& options = {});

/// Rows phi(x, ·) for the lowest state x of each critical class.
std::vector<TropVector> eigenfunction_spectral(const ManeMatrix& mane);
std::vector<TropVector> eigenfunction_spectral(const TransitionSystem& normalized,
                                               double tol = kDefaultTol);

/// Columns phi(·, y) for the lowest state y of each critical class.
std::vector<Density> eigen_density_spectral(const ManeMatrix& mane);
std::vector<Density> eigen_density_spectral(const TransitionSystem& normalized,
                                            double tol = kDefaultTol);

/// max_y |v(y) - ⊕_{x∈Ω} v(x) ⊗ phi(x, y)|. Throws InvalidInput unless v is
/// a fixed point of the normalized Bousch operator.
double representation_residual(const ErgodicReport& report,
                               std::span<const TropValue> v);

/// Gap between b and ⊕_{y∈Ω} phi(·, y) ⊗ b(y) on all singleton probes.
/// Throws InvalidInput unless b is a fixed point of the normalized adjoint.
double representation_residual(const ErgodicReport& report, const Density& b);

/// phi(x, y) ⊗ phi(y, x) = 0 for all Aubry points x, y.
bool is_uniquely_calibrated(const ManeMatrix& mane, double tol = kDefaultTol);

/// L_A(u) ≼ u ⊗ Q within tol.
bool is_subaction(const TransitionSystem& sys, std::span<const TropValue> u,
                  double tol = kDefaultTol);

/// λ with L_A(v) = λ ⊗ v within tol, if v is finite and such λ exists.
std::optional<double> eigenvalue_of(const TransitionSystem& sys,
                                    std::span<const TropValue> v,
                                    double tol = kDefaultTol);

/// λ with L*_A(b) = λ ⊗ b within tol, if b is neither bottom nor top.
std::optional<double> eigenvalue_of(const TransitionSystem& sys,
                                    const Density& b, double tol = kDefaultTol);

struct AnalysisOptions {
  double tol = kDefaultTol;
  /// Reject systems with a state that has no predecessor.
  bool strict = false;
};

/// Full report: Q, maximizing cycle, normalized system, Mañé matrix and
/// the spectral eigenfunction / eigen-density bases.
ErgodicReport analyze(const TransitionSystem& sys,
                      const AnalysisOptions& options = {});

}  // namespace tropdyn
