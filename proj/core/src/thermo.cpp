#include "tropdyn/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tropdyn/ergodic.hpp"
#include "tropdyn/errors.hpp"

namespace tropdyn {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

double lse2(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a == kMinusInf) return kMinusInf;
  return a + std::log1p(std::exp(b - a));
}

void check_beta(double beta, const char* where) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InvalidInput(std::string(where) + ": beta must be positive and finite");
}

void check_length(std::size_t expected, std::size_t got, const char* where) {
  if (expected != got)
    throw InvalidInput(std::string(where) + ": length mismatch (" +
                       std::to_string(expected) + " vs " + std::to_string(got) +
                       ")");
}

// Accumulates log Σ e^{terms} per slot with a running max.
class LogAccumulator {
 public:
  explicit LogAccumulator(std::size_t n) : max_(n, kMinusInf), sum_(n, 0.0) {}

  void add(std::size_t slot, double term) {
    if (term == kMinusInf) return;
    if (term <= max_[slot]) {
      sum_[slot] += std::exp(term - max_[slot]);
    } else {
      sum_[slot] = sum_[slot] * std::exp(max_[slot] - term) + 1.0;
      max_[slot] = term;
    }
  }

  std::vector<double> result() const {
    std::vector<double> out(max_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = max_[i] == kMinusInf ? kMinusInf : max_[i] + std::log(sum_[i]);
    return out;
  }

 private:
  std::vector<double> max_;
  std::vector<double> sum_;
};

double shift_to_max_zero(std::vector<double>& v) {
  const double top = *std::max_element(v.begin(), v.end());
  for (double& x : v) x -= top;
  return top;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> exp_all(std::span<const double> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(),
                 [](double x) { return std::exp(x); });
  return out;
}


// Perron projector of S = I + e^{-βQ} R by repeated squaring in log scale.
// S^K / |S^K| tends to u mᵀ; the loop stops once the normalized power is
// rank one to `tol`, measured entrywise on logarithms. Squaring reaches
// K = 2^k in k steps, so weakly coupled critical cycles (spectral gap
// ~ e^{-βc}) cost O(βc) steps instead of O(e^{βc}).
struct Projector {
  std::vector<double> log_u;
  std::vector<double> log_m;
  std::size_t squarings = 0;
};

Projector perron_by_squaring(const TransitionSystem& sys, double beta, double q,
                             double tol, std::size_t max_squarings) {
  const std::size_t n = sys.size();
  // X(x, y) = log S(x, y); S acts on u by (S u)(x) = Σ_y S(x, y) u(y).
  std::vector<double> x_log(n * n, kMinusInf), next(n * n);
  for (std::size_t i = 0; i < n; ++i) x_log[i * n + i] = 0.0;
  for (const Arc& a : sys.arcs()) {
    double& e = x_log[a.target * n + a.source];
    e = lse2(e, beta * (a.weight - q));
  }

  std::vector<double> row_max(n);
  for (std::size_t k = 1; k <= max_squarings; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double top = kMinusInf;
        for (std::size_t l = 0; l < n; ++l)
          top = std::max(top, x_log[i * n + l] + x_log[l * n + j]);
        double acc = 0.0;
        if (top != kMinusInf) {
          for (std::size_t l = 0; l < n; ++l) {
            const double t = x_log[i * n + l] + x_log[l * n + j];
            if (t != kMinusInf) acc += std::exp(t - top);
          }
        }
        next[i * n + j] = top == kMinusInf ? kMinusInf : top + std::log(acc);
      }
    }
    x_log.swap(next);
    const auto peak = std::max_element(x_log.begin(), x_log.end());
    const double shift = *peak;
    for (double& e : x_log) e -= shift;
    if (std::find(x_log.begin(), x_log.end(), kMinusInf) != x_log.end()) continue;

    const std::size_t at = static_cast<std::size_t>(peak - x_log.begin());
    const std::size_t i0 = at / n, j0 = at % n;
    double defect = 0.0, scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double e = x_log[i * n + j];
        scale = std::max(scale, std::abs(e));
        defect = std::max(defect, std::abs(e - x_log[i * n + j0] - x_log[i0 * n + j]));
      }
    }
    if (defect <= tol * scale) {
      Projector p;
      p.squarings = k;
      p.log_u.resize(n);
      p.log_m.resize(n);
      for (std::size_t i = 0; i < n; ++i) p.log_u[i] = x_log[i * n + j0];
      for (std::size_t j = 0; j < n; ++j) p.log_m[j] = x_log[i0 * n + j];
      return p;
    }
  }
  throw ConvergenceError("spectral_data: repeated squaring did not reach a rank-one limit in " +
                         std::to_string(max_squarings) + " steps at beta " +
                         std::to_string(beta));
}

}  // namespace

std::vector<double> SpectralData::u() const { return exp_all(log_u); }
std::vector<double> SpectralData::m() const { return exp_all(log_m); }
std::vector<double> SpectralData::mu() const { return exp_all(log_mu); }

double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return kMinusInf;
  const double top = *std::max_element(xs.begin(), xs.end());
  if (top == kMinusInf) return kMinusInf;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - top);
  return top + std::log(sum);
}

std::vector<double> ruelle_apply(const TransitionSystem& sys,
                                 std::span<const double> u, double beta) {
  check_beta(beta, "ruelle_apply");
  check_length(sys.size(), u.size(), "ruelle_apply");
  for (double x : u) {
    if (!(x > 0.0)) throw InvalidInput("ruelle_apply: entries must be positive");
  }
  std::vector<double> out(sys.size(), 0.0);
  for (const Arc& a : sys.arcs())
    out[a.target] += u[a.source] * std::exp(beta * a.weight);
  return out;
}

std::vector<double> log_ruelle_apply(const TransitionSystem& sys,
                                     std::span<const double> log_u,
                                     double beta) {
  check_beta(beta, "log_ruelle_apply");
  check_length(sys.size(), log_u.size(), "log_ruelle_apply");
  LogAccumulator acc(sys.size());
  for (const Arc& a : sys.arcs())
    acc.add(a.target, log_u[a.source] + beta * a.weight);
  return acc.result();
}

std::vector<double> log_ruelle_adjoint_apply(const TransitionSystem& sys,
                                             std::span<const double> log_m,
                                             double beta) {
  check_beta(beta, "log_ruelle_adjoint_apply");
  check_length(sys.size(), log_m.size(), "log_ruelle_adjoint_apply");
  LogAccumulator acc(sys.size());
  for (const Arc& a : sys.arcs())
    acc.add(a.source, beta * a.weight + log_m[a.target]);
  return acc.result();
}

SpectralData spectral_data(const TransitionSystem& sys, double beta,
                           const SpectralOptions& options) {
  check_beta(beta, "spectral_data");
  if (beta > options.beta_max) {
    throw InvalidInput("spectral_data: beta " + std::to_string(beta) +
                       " exceeds beta_max " + std::to_string(options.beta_max));
  }
  if (!is_irreducible(sys)) {
    throw ReducibleSystemError(
        "spectral_data: the system is not irreducible", components(sys));
  }
  const std::size_t n = sys.size();

  std::vector<double> lu, lm;
  double log_shift;
  std::size_t warmup = 0;
  {
    const ErgodicReport trop = analyze(sys);
    log_shift = beta * trop.q;
    lu = options.log_u_start.value_or(std::vector<double>{});
    lm = options.log_m_start.value_or(std::vector<double>{});
    const bool square = n <= options.squaring_max_states && lu.empty() && lm.empty();
    if (square) {
      Projector p = perron_by_squaring(sys, beta, trop.q, options.tol, options.max_iterations);
      lu = std::move(p.log_u);
      lm = std::move(p.log_m);
      warmup = p.squarings;
    }
    if (lu.empty()) {
      for (TropValue x : trop.eigenfunction_basis.front())
        lu.push_back(beta * x.value());
    }
    if (lm.empty()) {
      for (TropValue x : trop.eigen_density_basis.front().values())
        lm.push_back(beta * x.value());
    }
  }
  check_length(n, lu.size(), "spectral_data start vector");
  check_length(n, lm.size(), "spectral_data start vector");
  shift_to_max_zero(lu);
  shift_to_max_zero(lm);

  SpectralData out;
  out.beta = beta;
  bool converged = false;
  std::vector<double> next_u(n), next_m(n);
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    const std::vector<double> ru = log_ruelle_apply(sys, lu, beta);
    const std::vector<double> rm = log_ruelle_adjoint_apply(sys, lm, beta);

    // Upper Collatz–Wielandt bound on the Perron root; it converges to the
    // root and keeps the shift on the same scale.
    double estimate = kMinusInf;
    for (std::size_t x = 0; x < n; ++x) estimate = std::max(estimate, ru[x] - lu[x]);
    log_shift = estimate;

    for (std::size_t x = 0; x < n; ++x) {
      next_u[x] = lse2(ru[x], log_shift + lu[x]);
      next_m[x] = lse2(rm[x], log_shift + lm[x]);
    }
    shift_to_max_zero(next_u);
    shift_to_max_zero(next_m);

    double du = 0.0, dm = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      du = std::max(du, std::abs(next_u[x] - lu[x]));
      dm = std::max(dm, std::abs(next_m[x] - lm[x]));
    }
    lu.swap(next_u);
    lm.swap(next_m);
    out.iterations = warmup + it;
    const double threshold =
        options.tol * std::max({1.0, max_abs(lu), max_abs(lm)});
    if (du <= threshold && dm <= threshold) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("spectral_data: power iteration did not converge in " +
                           std::to_string(options.max_iterations) +
                           " steps at beta " + std::to_string(beta));
  }

  // Rayleigh-style quotient <m, R u> / <m, u>.
  const std::vector<double> ru = log_ruelle_apply(sys, lu, beta);
  std::vector<double> num(n), den(n);
  for (std::size_t x = 0; x < n; ++x) {
    num[x] = lm[x] + ru[x];
    den[x] = lm[x] + lu[x];
  }
  out.pressure = log_sum_exp(num) - log_sum_exp(den);

  const double mass = log_sum_exp(lm);
  for (double& x : lm) x -= mass;
  std::vector<double> pairing(n);
  for (std::size_t x = 0; x < n; ++x) pairing[x] = lu[x] + lm[x];
  const double scale = log_sum_exp(pairing);
  for (double& x : lu) x -= scale;

  out.log_mu.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.log_mu[x] = lu[x] + lm[x];
  out.log_u = std::move(lu);
  out.log_m = std::move(lm);
  return out;
}

std::vector<double> normalized_potential(const TransitionSystem& sys,
                                         const SpectralData& data) {
  check_length(sys.size(), data.log_u.size(), "normalized_potential");
  std::vector<double> g;
  g.reserve(sys.arcs().size());
  for (const Arc& a : sys.arcs()) {
    g.push_back(data.beta * a.weight + data.log_u[a.source] -
                data.log_u[a.target] - data.pressure);
  }
  return g;
}

double log_moment_from_log(std::span<const double> log_measure,
                           std::span<const double> f, double beta) {
  check_beta(beta, "log_moment");
  check_length(log_measure.size(), f.size(), "log_moment");
  std::vector<double> terms(f.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    terms[x] = log_measure[x] == kMinusInf ? kMinusInf : beta * f[x] + log_measure[x];
  return log_sum_exp(terms) / beta;
}

double log_moment(std::span<const double> measure, std::span<const double> f,
                  double beta) {
  std::vector<double> logs(measure.size());
  for (std::size_t x = 0; x < measure.size(); ++x) {
    if (measure[x] < 0.0) throw InvalidInput("log_moment: negative mass");
    logs[x] = measure[x] > 0.0 ? std::log(measure[x]) : kMinusInf;
  }
  return log_moment_from_log(logs, f, beta);
}

}  // namespace tropdyn
