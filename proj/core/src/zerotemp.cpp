#include "tropdyn/zerotemp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tropdyn/errors.hpp"

namespace tropdyn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_unique(const ErgodicReport& report, const char* where) {
  if (!report.uniquely_calibrated) {
    throw MultipleClassesError(
        std::string(where) + ": the critical graph has " +
            std::to_string(report.mane.critical_classes.size()) +
            " classes; limits are only unique for one",
        report.mane.critical_classes.size());
  }
}

std::vector<double> scaled(std::span<const double> v, double beta) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / beta;
  return out;
}

}  // namespace

Sweep beta_sweep(const TransitionSystem& sys, std::span<const double> grid,
                 const SpectralOptions& options) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
      throw InvalidInput("beta_sweep: grid must be positive and increasing");
  }
  const ErgodicReport report = analyze(sys);
  Sweep sweep;
  sweep.reference_state = report.mane.aubry.front();
  const std::size_t ref = sweep.reference_state;

  for (double beta : grid) {
    const SpectralData data = spectral_data(sys, beta, options);
    SweepRecord rec;
    rec.beta = beta;
    rec.pressure_over_beta = data.pressure / beta;
    rec.scaled_log_u = scaled(data.log_u, beta);
    const double pin = rec.scaled_log_u[ref];
    for (double& x : rec.scaled_log_u) x -= pin;
    rec.scaled_log_m = scaled(data.log_m, beta);
    const double top =
        *std::max_element(rec.scaled_log_m.begin(), rec.scaled_log_m.end());
    for (double& x : rec.scaled_log_m) x -= top;
    rec.scaled_g = scaled(normalized_potential(sys, data), beta);
    rec.log_mu = data.log_mu;
    sweep.records.push_back(std::move(rec));
  }
  return sweep;
}

RateFunction rate_function(const ErgodicReport& report) {
  require_unique(report, "rate_function");
  const Density& b0 = report.eigen_density_basis.front();
  const TropValue mass = fold_oplus(b0.values());
  TropVector b(b0.values().begin(), b0.values().end());
  for (TropValue& x : b)
    if (x.is_finite()) x = TropValue{x.value() - mass.value()};

  TropVector v = report.eigenfunction_basis.front();
  const TropValue pairing = fold_oplus(otimes(std::span<const TropValue>(v), b));
  for (TropValue& x : v)
    if (x.is_finite()) x = TropValue{x.value() - pairing.value()};

  TropVector rate(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    const TropValue s = otimes(v[x], b[x]);
    rate[x] = s.is_finite() ? TropValue{-s.value()} : kPosInf;
  }
  return {std::move(rate), std::move(v), Density(std::move(b))};
}

RateFunction rate_function(const TransitionSystem& sys) {
  return rate_function(analyze(sys));
}

namespace {

double ldp_gap(std::span<const double> log_mu, double beta,
               std::span<const double> f, const RateFunction& rate) {
  if (f.size() != rate.rate.size())
    throw InvalidInput("ldp_residual: probe length does not match the system");
  const double lhs = log_moment_from_log(log_mu, f, beta);
  double rhs = -kInf;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (rate.rate[x].is_finite()) rhs = std::max(rhs, f[x] - rate.rate[x].value());
  }
  return std::abs(lhs - rhs);
}

}  // namespace

double ldp_residual(const SpectralData& data, std::span<const double> f,
                    const RateFunction& rate) {
  return ldp_gap(data.log_mu, data.beta, f, rate);
}

double ldp_residual(const TransitionSystem& sys, std::span<const double> f,
                    double beta, const RateFunction& rate,
                    const SpectralOptions& options) {
  return ldp_residual(spectral_data(sys, beta, options), f, rate);
}

double ldp_residual(const SweepRecord& record, std::span<const double> f,
                    const RateFunction& rate) {
  return ldp_gap(record.log_mu, record.beta, f, rate);
}

std::vector<LimitDiagnostics> limit_diagnostics(const Sweep& sweep,
                                                const ErgodicReport& report) {
  require_unique(report, "limit_diagnostics");
  const TransitionSystem& normalized = report.normalized_system;
  const std::size_t n = normalized.size();
  const std::size_t ref = sweep.reference_state;

  const RateFunction pair = rate_function(report);
  const TropVector& v_pair = pair.v_used;
  const TropVector b(pair.b_used.values().begin(), pair.b_used.values().end());
  std::vector<double> v(n), b_hat(n);
  for (std::size_t x = 0; x < n; ++x) {
    v[x] = v_pair[x].to_double() - v_pair[ref].to_double();
    b_hat[x] = otimes(v_pair[x], b[x]).to_double();
  }
  std::vector<double> a_hat;
  for (const Arc& a : normalized.arcs())
    a_hat.push_back(a.weight + v[a.source] - v[a.target]);

  std::vector<LimitDiagnostics> out;
  const SweepRecord* previous = nullptr;
  for (const SweepRecord& rec : sweep.records) {
    LimitDiagnostics d;
    d.beta = rec.beta;
    for (std::size_t x = 0; x < n; ++x) {
      d.d_u = std::max(d.d_u, std::abs(rec.scaled_log_u[x] - v[x]));
      if (b[x].is_finite()) {
        d.d_b = std::max(d.d_b, std::abs(rec.scaled_log_m[x] - b[x].value()));
      } else {
        const bool below = rec.scaled_log_m[x] <= kDivergenceFloor;
        const bool falling =
            previous == nullptr || rec.scaled_log_m[x] <= previous->scaled_log_m[x];
        d.b_divergence_ok = d.b_divergence_ok && below && falling;
      }
    }
    for (std::size_t i = 0; i < a_hat.size(); ++i)
      d.d_g = std::max(d.d_g, std::abs(rec.scaled_g[i] - a_hat[i]));

    std::vector<double> pushed(n, -kInf);
    const auto arcs = normalized.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      pushed[arcs[i].source] =
          std::max(pushed[arcs[i].source], b_hat[arcs[i].target] + rec.scaled_g[i]);
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (pushed[y] == b_hat[y]) continue;  // covers matching infinities
      d.d_D = std::max(d.d_D, std::abs(pushed[y] - b_hat[y]));
    }
    out.push_back(d);
    previous = &rec;
  }
  return out;
}

}  // namespace tropdyn
