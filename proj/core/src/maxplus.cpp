#include "tropdyn/maxplus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tropdyn/errors.hpp"
#include "tropdyn/graph.hpp"

namespace tropdyn {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

// Floyd–Warshall over doubles; -inf marks missing arcs. Assumes no cycle of
// positive weight, otherwise the diagonal simply comes out positive.
std::vector<double> closure_table(const TropMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = m(i, j).to_double();

  for (std::size_t k = 0; k < n; ++k) {
    const double* row_k = c.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double ik = c[i * n + k];
      if (ik == kMinusInf) continue;
      double* row_i = c.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double through = ik + row_k[j];
        if (through > row_i[j]) row_i[j] = through;
      }
    }
  }
  return c;
}

TropMatrix to_matrix(const std::vector<double>& c, std::size_t n) {
  TropMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = TropValue{c[i * n + j]};
  return out;
}

// Karp's recurrence from a virtual source connected to every node.
TropValue karp_mean(const TropMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return kNegInf;
  std::vector<std::vector<double>> d(n + 1, std::vector<double>(n, kMinusInf));
  std::fill(d[0].begin(), d[0].end(), 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      const double du = d[k - 1][u];
      if (du == kMinusInf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const TropValue w = m(u, v);
        if (!w.is_finite()) continue;
        d[k][v] = std::max(d[k][v], du + w.value());
      }
    }
  }

  bool found = false;
  double best = kMinusInf;
  for (std::size_t v = 0; v < n; ++v) {
    if (d[n][v] == kMinusInf) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (d[k][v] == kMinusInf) continue;
      worst = std::min(worst, (d[n][v] - d[k][v]) /
                                  static_cast<double>(n - k));
    }
    if (!found || worst > best) {
      best = worst;
      found = true;
    }
  }
  return found ? TropValue{best} : kNegInf;
}

}  // namespace

TropMatrix TropMatrix::from_rows(
    const std::vector<std::vector<TropValue>>& rows) {
  const std::size_t n = rows.size();
  TropMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InvalidInput("TropMatrix: row " + std::to_string(i) +
                         " has length " + std::to_string(rows[i].size()) +
                         ", expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j].is_pos_inf())
        throw InvalidInput("TropMatrix: +inf entry at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
      out(i, j) = rows[i][j];
    }
  }
  return out;
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = kUnit;
  return out;
}

TropVector TropMatrix::column(std::size_t j) const {
  TropVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

TropMatrix TropMatrix::shifted(double delta) const {
  TropMatrix out = *this;
  for (TropValue& x : out.data_) {
    if (x.is_finite()) x = TropValue{x.value() - delta};
  }
  return out;
}

TropVector mat_vec(const TropMatrix& m, std::span<const TropValue> v) {
  const std::size_t n = m.size();
  if (v.size() != n) {
    throw InvalidInput("mat_vec: dimension mismatch (" +
                                std::to_string(n) + " vs " +
                                std::to_string(v.size()) + ")");
  }
  TropVector out(n, kNegInf);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < n; ++j)
      out[j] = oplus(out[j], otimes(m(i, j), v[i]));
  }
  return out;
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("mat_mul: size mismatch");
  const std::size_t n = a.size();
  TropMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const TropValue aik = a(i, k);
      if (aik.is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) = oplus(out(i, j), otimes(aik, b(k, j)));
    }
  return out;
}

TropMatrix mat_oplus(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size())
    throw InvalidInput("mat_oplus: size mismatch");
  TropMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  return out;
}

double sup_distance(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size())
    throw InvalidInput("sup_distance: size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, sup_distance(a.row(i), b.row(i)));
  return worst;
}

std::vector<std::vector<std::size_t>> critical_graph(const TropMatrix& m,
                                                     const TropMatrix& closure,
                                                     double tol) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const TropValue there = m(i, j);
      const TropValue back = closure(j, i);
      if (!there.is_finite() || !back.is_finite()) continue;
      if (std::abs(there.value() + back.value()) <= tol) out[i].push_back(j);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> critical_classes(
    const TropMatrix& m, const TropMatrix& closure, double tol) {
  const auto graph = critical_graph(m, closure, tol);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& comp : strongly_connected_components(graph)) {
    // A lone node belongs to the critical graph only through a self-loop.
    if (comp.size() == 1) {
      const auto& succ = graph[comp.front()];
      if (std::find(succ.begin(), succ.end(), comp.front()) == succ.end())
        continue;
    }
    classes.push_back(std::move(comp));
  }
  return classes;
}

CycleMeanResult max_cycle_mean(const TropMatrix& m, double tol) {
  CycleMeanResult result{karp_mean(m), {}};
  if (result.mean.is_neg_inf()) return result;

  const TropMatrix normalized = m.shifted(result.mean.value());
  const TropMatrix closure = to_matrix(closure_table(normalized), m.size());
  const auto graph = critical_graph(normalized, closure, tol);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const TropValue d = closure(i, i);
    if (d.is_finite() && std::abs(d.value()) <= tol) {
      result.witness = shortest_cycle_through(graph, i);
      break;
    }
  }
  return result;
}

TropMatrix kleene_plus(const TropMatrix& m, double tol) {
  const std::size_t n = m.size();
  const std::vector<double> c = closure_table(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i * n + i] > tol) {
      const CycleMeanResult bad = max_cycle_mean(m, tol);
      throw PositiveCycleError(
          "kleene_plus: cycle of positive mean " + to_string(bad.mean) +
              " makes the closure diverge",
          bad.witness);
    }
  }
  return to_matrix(c, n);
}

std::vector<std::size_t> critical_nodes(const TropMatrix& m, double tol) {
  const TropMatrix closure = kleene_plus(m, tol);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const TropValue d = closure(i, i);
    if (d.is_finite() && std::abs(d.value()) <= tol) out.push_back(i);
  }
  return out;
}

EigenResult eigenproblem(const TropMatrix& m, double tol) {
  EigenResult result{max_cycle_mean(m, tol).mean, {}, {}};
  if (result.eigenvalue.is_neg_inf()) return result;
  const TropMatrix normalized = m.shifted(result.eigenvalue.value());
  const TropMatrix closure = kleene_plus(normalized, tol);
  result.classes = critical_classes(normalized, closure, tol);
  for (const auto& cls : result.classes) {
    const auto row = closure.row(cls.front());
    result.basis.emplace_back(row.begin(), row.end());
  }
  return result;
}

}  // namespace tropdyn
