#pragma once

// Positive-temperature thermodynamic formalism on a finite system: the
// Ruelle operator R_{βA} u(x) = Σ_{y -> x} u(y) e^{β A(y -> x)}, its Perron
// data, the normalized potential g_β and the log-moment functional.
//
// Eigenvectors are stored as logarithms. At large β the entries span
// hundreds of orders of magnitude and would underflow as plain doubles.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropdyn/dynamics.hpp"

namespace tropdyn {

struct SpectralData {
  double beta = 0.0;
  double pressure = 0.0;       ///< P(T, βA) = log of the Perron root
  std::vector<double> log_u;   ///< R u = e^P u,      Σ u·m = 1
  std::vector<double> log_m;   ///< m R = e^P m,      Σ m = 1
  std::vector<double> log_mu;  ///< equilibrium state μ = u·m
  std::size_t iterations = 0;

  std::vector<double> u() const;
  std::vector<double> m() const;
  std::vector<double> mu() const;
};

struct SpectralOptions {
  std::size_t max_iterations = 100000;
  /// Convergence: change of log u and log m per step below
  /// tol·max(1, |log u|, |log m|).
  double tol = 1e-12;
  double beta_max = 2000.0;
  /// Systems up to this size get their start vectors from repeated squaring
  /// (O(n³) per step); larger ones start from the tropical eigen-objects.
  std::size_t squaring_max_states = 128;
  /// Explicit start vectors (log scale) for the power iteration. Giving
  /// either one skips the squaring stage.
  std::optional<std::vector<double>> log_u_start;
  std::optional<std::vector<double>> log_m_start;
};

/// R_{βA} u. Entries of u must be positive.
std::vector<double> ruelle_apply(const TransitionSystem& sys,
                                 std::span<const double> u, double beta);

/// log R_{βA}(e^{log_u}), evaluated with log-sum-exp.
std::vector<double> log_ruelle_apply(const TransitionSystem& sys,
                                     std::span<const double> log_u,
                                     double beta);

/// log R*_{βA}(e^{log_m}) with R*(m)(y) = Σ_{y -> x} e^{β A(y -> x)} m(x).
std::vector<double> log_ruelle_adjoint_apply(const TransitionSystem& sys,
                                             std::span<const double> log_m,
                                             double beta);

/// Perron eigenvalue, eigenfunction, eigenmeasure and equilibrium state of
/// R_{βA}. Requires an irreducible system (ReducibleSystemError) and
/// 0 < β ≤ beta_max (InvalidInput).
///
/// Start vectors come from repeated squaring of I + e^{-βQ} R in log scale,
/// which stays fast when critical cycles are only weakly coupled and plain
/// power iteration would stall. They are then refined by power iteration
/// on R + cI with c tracking the current Perron root estimate; the shift
/// handles periodic systems, where plain power iteration oscillates.
SpectralData spectral_data(const TransitionSystem& sys, double beta,
                           const SpectralOptions& options = {});

/// g_β(y -> x) = β A(y -> x) + log u(y) - log u(x) - P per arc, in the
/// order of sys.arcs().
std::vector<double> normalized_potential(const TransitionSystem& sys,
                                         const SpectralData& data);

/// (1/β) log Σ_x e^{β f(x)} measure(x)
double log_moment(std::span<const double> measure, std::span<const double> f,
                  double beta);

/// Same with the measure given by its logarithm.
double log_moment_from_log(std::span<const double> log_measure,
                           std::span<const double> f, double beta);

/// log Σ e^{x_i}; -inf for an empty or all -inf input.
double log_sum_exp(std::span<const double> xs);

}  // namespace tropdyn
