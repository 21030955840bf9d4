#pragma once

// Tropical measures on a finite discrete state space. Every subset is open,
// so a measure is determined by its density b(x) = m({x}) and
//
//   m(S) = ⊕_{x∈S} b(x),      ∫_S f dm = ⊕_{x∈S} f(x) ⊗ b(x).
//
// The constant +inf density is kept as a flag; any other density has no
// +inf entry.

#include <cstddef>
#include <span>
#include <vector>

#include "tropdyn/tropical.hpp"

namespace tropdyn {

class TransitionSystem;

class Density {
 public:
  /// Throws InvalidInput if some entry is +inf.
  explicit Density(TropVector values);

  /// The constant +inf density on n states.
  static Density top(std::size_t n);

  /// The constant -inf density (zero functional) on n states.
  static Density bottom(std::size_t n);

  bool is_top() const noexcept { return top_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Entries; all +inf for the top density.
  std::span<const TropValue> values() const noexcept { return values_; }
  TropValue operator[](std::size_t x) const { return values_[x]; }

  friend bool operator==(const Density&, const Density&) = default;

 private:
  Density() = default;
  TropVector values_;
  bool top_ = false;
};

/// f ↦ ⊕_x f(x) ⊗ b(x)
class TropicalFunctional {
 public:
  explicit TropicalFunctional(Density density) : density_(std::move(density)) {}

  const Density& density() const noexcept { return density_; }
  TropValue operator()(std::span<const TropValue> f) const;

 private:
  Density density_;
};

TropValue functional_eval(const TropicalFunctional& l,
                          std::span<const TropValue> f);

/// ⊕_{x∈S} b(x); -inf on the empty set.
TropValue measure_of(const Density& b, std::span<const std::size_t> subset);

/// ⊕_{x∈S} f(x) ⊗ b(x)
TropValue tropical_integral(const Density& b, std::span<const TropValue> f,
                            std::span<const std::size_t> subset);

/// b(x) = ⊕_{y ∈ T⁻¹(x)} b(y) at every state. Requires a deterministic system.
bool is_invariant(const TransitionSystem& sys, const Density& b);

/// For an invariant b: b(T^k(x)) settles at ⊕b for every x with finite
/// b(x), and at -inf where b(x) = -inf.
bool is_ergodic(const TransitionSystem& sys, const Density& b);

/// The indicator probes 0 on {x}, -inf elsewhere, for every state x.
std::vector<TropVector> singleton_probes(std::size_t n);

/// Functional equality on the given probes.
bool densities_equivalent(const Density& b1, const Density& b2,
                          std::span<const TropVector> probes);

/// Functional equality on the full singleton basis (exact on finite X).
bool densities_equivalent(const Density& b1, const Density& b2);

}  // namespace tropdyn
