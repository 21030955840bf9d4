#pragma once

// β-sweeps that compare (1/β)-scaled thermodynamic data with the tropical
// objects they converge to as β → ∞, and the large-deviation rate function
// of the equilibrium states.

#include <cstddef>
#include <span>
#include <vector>

#include "tropdyn/dynamics.hpp"
#include "tropdyn/ergodic.hpp"
#include "tropdyn/thermo.hpp"

namespace tropdyn {

inline const std::vector<double> kDefaultGrid{10.0, 100.0, 1000.0};

struct SweepRecord {
  double beta = 0.0;
  std::vector<double> scaled_log_u;  ///< (1/β) log u_β, zero at the reference state
  std::vector<double> scaled_log_m;  ///< (1/β) log m_β({x}), maximum zero
  std::vector<double> scaled_g;      ///< g_β / β per arc
  std::vector<double> log_mu;        ///< log μ_β({x}), unscaled
  double pressure_over_beta = 0.0;
};

struct Sweep {
  /// Aubry state at which scaled_log_u is pinned to zero.
  std::size_t reference_state = 0;
  std::vector<SweepRecord> records;
};

/// One record per β of a positive increasing grid. The reference state is
/// the lowest Aubry state of the system.
Sweep beta_sweep(const TransitionSystem& sys, std::span<const double> grid,
                 const SpectralOptions& options = {});

struct RateFunction {
  TropVector rate;    ///< I = -(v ⊗ b), +inf where v ⊗ b = -inf
  TropVector v_used;  ///< eigenfunction with ⊕(v ⊗ b) = 0
  Density b_used;     ///< eigen-density with ⊕b = 0
};

/// Rate function built from the spectral eigen-pair of the unique critical
/// class. Throws MultipleClassesError otherwise.
RateFunction rate_function(const ErgodicReport& report);
RateFunction rate_function(const TransitionSystem& sys);

/// |(1/β) log ∫ e^{βf} dμ_β - max_x (f(x) - I(x))|
double ldp_residual(const SpectralData& data, std::span<const double> f,
                    const RateFunction& rate);
double ldp_residual(const TransitionSystem& sys, std::span<const double> f,
                    double beta, const RateFunction& rate,
                    const SpectralOptions& options = {});

/// Same from a sweep record.
double ldp_residual(const SweepRecord& record, std::span<const double> f,
                    const RateFunction& rate);

struct LimitDiagnostics {
  double beta = 0.0;
  /// sup |scaled_log_u - v| with v(reference) = 0
  double d_u = 0.0;
  /// sup |scaled_log_m - b| over states where b is finite (⊕b = 0)
  double d_b = 0.0;
  /// Where b = -inf: scaled_log_m lies below the floor and does not
  /// increase compared with the previous β. True when b is finite everywhere.
  bool b_divergence_ok = true;
  /// sup |g_β/β - Â| per arc, Â(y -> x) = Ā(y -> x) + v(y) - v(x)
  double d_g = 0.0;
  /// max_y |⊕_{y -> x} (b̂(x) + g_β/β(y -> x)) - b̂(y)| with b̂ = v ⊗ b
  double d_D = 0.0;
};

inline constexpr double kDivergenceFloor = -10.0;

/// Requires a uniquely calibrated report (MultipleClassesError otherwise).
std::vector<LimitDiagnostics> limit_diagnostics(const Sweep& sweep,
                                                const ErgodicReport& report);

}  // namespace tropdyn
