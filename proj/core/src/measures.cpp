#include "tropdyn/measures.hpp"

#include <algorithm>
#include <string>

#include "tropdyn/dynamics.hpp"
#include "tropdyn/errors.hpp"

namespace tropdyn {

namespace {

void check_length(std::size_t expected, std::size_t got, const char* where) {
  if (expected != got) {
    throw InvalidInput(std::string(where) + ": length mismatch (" +
                       std::to_string(expected) + " vs " +
                       std::to_string(got) + ")");
  }
}

void check_subset(std::size_t n, std::span<const std::size_t> subset,
                  const char* where) {
  for (std::size_t x : subset) {
    if (x >= n)
      throw InvalidInput(std::string(where) + ": unknown state " +
                         std::to_string(x));
  }
}

void require_deterministic(const TransitionSystem& sys, const char* where) {
  if (!sys.deterministic()) {
    throw AssumptionViolation(std::string(where) +
                              ": system does not have a deterministic image map");
  }
}

}  // namespace

Density::Density(TropVector values) : values_(std::move(values)) {
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x].is_pos_inf())
      throw InvalidInput("Density: +inf entry at state " + std::to_string(x) +
                         " (use Density::top for the top density)");
  }
}

Density Density::top(std::size_t n) {
  Density d;
  d.values_.assign(n, kPosInf);
  d.top_ = true;
  return d;
}

Density Density::bottom(std::size_t n) { return Density(TropVector(n, kNegInf)); }

TropValue TropicalFunctional::operator()(std::span<const TropValue> f) const {
  check_length(density_.size(), f.size(), "functional_eval");
  if (density_.is_top()) {
    const bool all_neg_inf = std::all_of(
        f.begin(), f.end(), [](TropValue x) { return x.is_neg_inf(); });
    return all_neg_inf ? kNegInf : kPosInf;
  }
  TropValue acc = kNegInf;
  for (std::size_t x = 0; x < f.size(); ++x)
    acc = oplus(acc, otimes(f[x], density_[x]));
  return acc;
}

TropValue functional_eval(const TropicalFunctional& l,
                          std::span<const TropValue> f) {
  return l(f);
}

TropValue measure_of(const Density& b, std::span<const std::size_t> subset) {
  check_subset(b.size(), subset, "measure_of");
  TropValue acc = kNegInf;
  for (std::size_t x : subset) acc = oplus(acc, b[x]);
  return acc;
}

TropValue tropical_integral(const Density& b, std::span<const TropValue> f,
                            std::span<const std::size_t> subset) {
  check_length(b.size(), f.size(), "tropical_integral");
  check_subset(b.size(), subset, "tropical_integral");
  TropValue acc = kNegInf;
  for (std::size_t x : subset) acc = oplus(acc, otimes(f[x], b[x]));
  return acc;
}

bool is_invariant(const TransitionSystem& sys, const Density& b) {
  require_deterministic(sys, "is_invariant");
  check_length(sys.size(), b.size(), "is_invariant");
  for (std::size_t x = 0; x < sys.size(); ++x) {
    TropValue pre = kNegInf;
    for (std::size_t a : sys.incoming(x)) pre = oplus(pre, b[sys.arcs()[a].source]);
    if (pre != b[x]) return false;
  }
  return true;
}

bool is_ergodic(const TransitionSystem& sys, const Density& b) {
  if (!is_invariant(sys, b)) {
    throw InvalidInput("is_ergodic: density is not invariant");
  }
  const std::size_t n = sys.size();
  const TropValue total = fold_oplus(b.values());
  for (std::size_t x = 0; x < n; ++x) {
    // After n steps the orbit is on its cycle; one more lap of at most n
    // steps shows every value the sequence keeps taking.
    std::size_t z = x;
    for (std::size_t k = 0; k < n; ++k) z = sys.image(z);
    const TropValue expected = b[x].is_neg_inf() ? kNegInf : total;
    for (std::size_t k = 0; k < n; ++k) {
      if (b[z] != expected) return false;
      z = sys.image(z);
    }
  }
  return true;
}

std::vector<TropVector> singleton_probes(std::size_t n) {
  std::vector<TropVector> probes;
  probes.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    TropVector f(n, kNegInf);
    f[x] = kUnit;
    probes.push_back(std::move(f));
  }
  return probes;
}

bool densities_equivalent(const Density& b1, const Density& b2,
                          std::span<const TropVector> probes) {
  check_length(b1.size(), b2.size(), "densities_equivalent");
  const TropicalFunctional l1(b1), l2(b2);
  return std::all_of(probes.begin(), probes.end(), [&](const TropVector& f) {
    return l1(f) == l2(f);
  });
}

bool densities_equivalent(const Density& b1, const Density& b2) {
  const auto probes = singleton_probes(b1.size());
  return densities_equivalent(b1, b2, probes);
}

}  // namespace tropdyn
