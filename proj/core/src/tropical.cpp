#include "tropdyn/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tropdyn/errors.hpp"

namespace tropdyn {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw InvalidInput(std::string(where) + ": length mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

std::string to_string(TropValue a) {
  if (a.is_neg_inf()) return "-inf";
  if (a.is_pos_inf()) return "+inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", a.value());
  return buf;
}

TropVector to_trop(std::span<const double> values) {
  return TropVector(values.begin(), values.end());
}

std::vector<double> to_doubles(std::span<const TropValue> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (TropValue v : values) out.push_back(v.to_double());
  return out;
}

TropVector oplus(std::span<const TropValue> u, std::span<const TropValue> v) {
  require_same_length(u.size(), v.size(), "oplus");
  TropVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = oplus(u[i], v[i]);
  return out;
}

TropVector otimes(TropValue lambda, std::span<const TropValue> u) {
  TropVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = otimes(lambda, u[i]);
  return out;
}

TropVector otimes(std::span<const TropValue> u, std::span<const TropValue> v) {
  require_same_length(u.size(), v.size(), "otimes");
  TropVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = otimes(u[i], v[i]);
  return out;
}

TropValue fold_oplus(std::span<const TropValue> u) noexcept {
  TropValue acc = kNegInf;
  for (TropValue x : u) acc = oplus(acc, x);
  return acc;
}

bool preceq(std::span<const TropValue> u, std::span<const TropValue> v) {
  require_same_length(u.size(), v.size(), "preceq");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] < u[i]) return false;
  }
  return true;
}

TropValue residual(std::span<const TropValue> u, std::span<const TropValue> v) {
  require_same_length(u.size(), v.size(), "residual");
  // Each state bounds λ from above; the residual is the tightest bound.
  TropValue best = kPosInf;
  for (std::size_t i = 0; i < u.size(); ++i) {
    TropValue bound;
    if (v[i].is_neg_inf() || u[i].is_pos_inf()) {
      bound = kPosInf;
    } else if (v[i].is_pos_inf() || u[i].is_neg_inf()) {
      bound = kNegInf;
    } else {
      bound = TropValue{u[i].value() - v[i].value()};
    }
    best = std::min(best, bound);
  }
  return best;
}

double sup_distance(std::span<const TropValue> u, std::span<const TropValue> v) {
  require_same_length(u.size(), v.size(), "sup_distance");
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_finite() && v[i].is_finite()) {
      worst = std::max(worst, std::abs(u[i].value() - v[i].value()));
    } else if (u[i].kind() != v[i].kind()) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return worst;
}

bool all_finite(std::span<const TropValue> u) noexcept {
  return std::all_of(u.begin(), u.end(),
                     [](TropValue x) { return x.is_finite(); });
}

}  // namespace tropdyn
