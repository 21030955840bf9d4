#include "tropdyn/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "tropdyn/errors.hpp"
#include "tropdyn/graph.hpp"

namespace tropdyn {

namespace {

bool near_zero(TropValue x, double tol) {
  return x.is_finite() && std::abs(x.value()) <= tol;
}

std::size_t auto_window(const TransitionSystem& normalized, double tol) {
  const std::size_t n = normalized.size();
  const TropMatrix w = normalized.weight_matrix();
  const TropMatrix closure = kleene_plus(w, tol);
  const auto graph = critical_graph(w, closure, tol);
  std::size_t period = 1;
  for (const auto& cls : critical_classes(w, closure, tol)) {
    const std::size_t c = cyclicity(graph, cls);
    if (c > 0) period = std::lcm(period, c);
  }
  return std::max(n, period);
}

}  // namespace

EnergyResult max_potential_energy(const TransitionSystem& sys, double tol) {
  const CycleMeanResult r = max_cycle_mean(sys.weight_matrix(), tol);
  if (r.mean.is_neg_inf())
    throw AssumptionViolation("max_potential_energy: the system has no cycle");
  return {r.mean.value(), closed_path(r.witness)};
}

TransitionSystem normalize(const TransitionSystem& sys, double tol) {
  return sys.shifted(max_potential_energy(sys, tol).q);
}

ManeMatrix mane_potential(const TransitionSystem& normalized, double tol) {
  const TropMatrix w = normalized.weight_matrix();
  ManeMatrix out;
  out.phi = kleene_plus(w, tol);
  for (std::size_t x = 0; x < normalized.size(); ++x) {
    if (near_zero(out.phi(x, x), tol)) out.aubry.push_back(x);
  }
  out.critical_classes = critical_classes(w, out.phi, tol);
  return out;
}

TropVector subaction_limsup(const TransitionSystem& normalized,
                            std::span<const TropValue> u0,
                            const LimsupOptions& options) {
  const std::size_t n = normalized.size();
  if (u0.size() != n)
    throw InvalidInput("subaction_limsup: start vector has the wrong length");
  if (!all_finite(u0))
    throw InvalidInput("subaction_limsup: start vector must be finite");

  const std::size_t window =
      options.window ? options.window : auto_window(normalized, options.tol);
  const std::size_t cap =
      options.cap ? options.cap : std::max(4 * n * n, 4 * window);

  std::deque<TropVector> recent;  // last `window` iterates
  std::deque<TropVector> sups;    // window suprema, oldest first
  TropVector u(u0.begin(), u0.end());
  double last_gap = std::numeric_limits<double>::infinity();

  for (std::size_t k = 0; k <= cap; ++k) {
    recent.push_back(u);
    if (recent.size() > window) recent.pop_front();
    if (recent.size() == window) {
      TropVector sup(n, kNegInf);
      for (const TropVector& it : recent) sup = oplus(sup, it);
      sups.push_back(std::move(sup));
      if (sups.size() > window) {
        const TropVector& current = sups.back();
        last_gap = sup_distance(sups.front(), current);
        if (last_gap <= options.tol &&
            sup_distance(bousch_apply(normalized, current), current) <=
                options.tol) {
          return current;
        }
        sups.pop_front();
      }
    }
    u = bousch_apply(normalized, u);
  }
  throw ConvergenceError(
      "subaction_limsup: window supremum not stationary after " +
      std::to_string(cap) + " iterations (window " + std::to_string(window) +
      ", last gap " + std::to_string(last_gap) + ")");
}

std::vector<TropVector> eigenfunction_spectral(const ManeMatrix& mane) {
  std::vector<TropVector> basis;
  for (const auto& cls : mane.critical_classes) {
    const auto row = mane.phi.row(cls.front());
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

std::vector<TropVector> eigenfunction_spectral(const TransitionSystem& normalized,
                                               double tol) {
  return eigenfunction_spectral(mane_potential(normalized, tol));
}

std::vector<Density> eigen_density_spectral(const ManeMatrix& mane) {
  std::vector<Density> basis;
  for (const auto& cls : mane.critical_classes)
    basis.emplace_back(mane.phi.column(cls.front()));
  return basis;
}

std::vector<Density> eigen_density_spectral(const TransitionSystem& normalized,
                                            double tol) {
  return eigen_density_spectral(mane_potential(normalized, tol));
}

double representation_residual(const ErgodicReport& report,
                               std::span<const TropValue> v) {
  const TransitionSystem& sys = report.normalized_system;
  if (v.size() != sys.size())
    throw InvalidInput("representation_residual: wrong vector length");
  if (sup_distance(bousch_apply(sys, v), v) > report.tol)
    throw InvalidInput("representation_residual: not a tropical eigenfunction");
  const TropMatrix& phi = report.mane.phi;
  TropVector rebuilt(sys.size(), kNegInf);
  for (std::size_t x : report.mane.aubry)
    for (std::size_t y = 0; y < sys.size(); ++y)
      rebuilt[y] = oplus(rebuilt[y], otimes(v[x], phi(x, y)));
  return sup_distance(v, rebuilt);
}

double representation_residual(const ErgodicReport& report, const Density& b) {
  const TransitionSystem& sys = report.normalized_system;
  if (b.size() != sys.size() || b.is_top())
    throw InvalidInput("representation_residual: unusable density");
  if (sup_distance(adjoint_apply(sys, b).values(), b.values()) > report.tol)
    throw InvalidInput("representation_residual: not a tropical eigen-density");
  const TropMatrix& phi = report.mane.phi;
  TropVector rebuilt(sys.size(), kNegInf);
  for (std::size_t z = 0; z < sys.size(); ++z)
    for (std::size_t y : report.mane.aubry)
      rebuilt[z] = oplus(rebuilt[z], otimes(phi(z, y), b[y]));

  // Compare the two functionals on every singleton probe.
  const TropicalFunctional lhs(b), rhs{Density(rebuilt)};
  double worst = 0.0;
  for (const TropVector& f : singleton_probes(sys.size())) {
    const TropValue a = lhs(f);
    const TropValue c = rhs(f);
    worst = std::max(worst, sup_distance(std::span(&a, 1), std::span(&c, 1)));
  }
  return worst;
}

bool is_uniquely_calibrated(const ManeMatrix& mane, double tol) {
  if (mane.aubry.empty()) return false;
  for (std::size_t x : mane.aubry)
    for (std::size_t y : mane.aubry)
      if (!near_zero(otimes(mane.phi(x, y), mane.phi(y, x)), tol)) return false;
  return true;
}

bool is_subaction(const TransitionSystem& sys, std::span<const TropValue> u,
                  double tol) {
  const double q = max_potential_energy(sys, tol).q;
  const TropVector lu = bousch_apply(sys, u);
  for (std::size_t x = 0; x < sys.size(); ++x) {
    const TropValue bound = otimes(u[x], TropValue{q + tol});
    if (bound < lu[x]) return false;
  }
  return true;
}

std::optional<double> eigenvalue_of(const TransitionSystem& sys,
                                    std::span<const TropValue> v, double tol) {
  if (v.size() != sys.size() || !all_finite(v)) return std::nullopt;
  const TropVector lv = bousch_apply(sys, v);
  if (!all_finite(lv)) return std::nullopt;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t x = 0; x < v.size(); ++x) {
    const double d = lv[x].value() - v[x].value();
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (hi - lo > tol) return std::nullopt;
  return hi;
}

std::optional<double> eigenvalue_of(const TransitionSystem& sys,
                                    const Density& b, double tol) {
  if (b.size() != sys.size() || b.is_top()) return std::nullopt;
  const Density lb = adjoint_apply(sys, b);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (b[x].is_neg_inf() != lb[x].is_neg_inf()) return std::nullopt;
    if (b[x].is_neg_inf()) continue;
    const double d = lb[x].value() - b[x].value();
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (lo > hi || hi - lo > tol) return std::nullopt;
  return hi;
}

ErgodicReport analyze(const TransitionSystem& sys,
                      const AnalysisOptions& options) {
  if (options.strict && !sys.surjective_like())
    throw AssumptionViolation("analyze: some state has no predecessor");
  ErgodicReport report;
  report.tol = options.tol;
  const EnergyResult energy = max_potential_energy(sys, options.tol);
  report.q = energy.q;
  report.maximizing_cycle = energy.witness;
  report.normalized_system = sys.shifted(energy.q);
  report.mane = mane_potential(report.normalized_system, options.tol);
  report.eigenfunction_basis = eigenfunction_spectral(report.mane);
  report.eigen_density_basis = eigen_density_spectral(report.mane);
  report.uniquely_calibrated = is_uniquely_calibrated(report.mane, options.tol);
  return report;
}

}  // namespace tropdyn
