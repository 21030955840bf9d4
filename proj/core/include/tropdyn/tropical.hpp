#pragma once

// Scalar max-plus semiring over R ∪ {-inf, +inf} and its pointwise
// extension to state-indexed vectors.
//
//   a ⊕ b = max(a, b)        zero: -inf
//   a ⊗ b = a + b            unit: 0
//   -inf ⊗ +inf = -inf

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropdyn {

/// Default tolerance for zero-mean and fixed-point tests outside the
/// semiring itself. The semiring operations are exact.
inline constexpr double kDefaultTol = 1e-9;

class TropValue {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  /// The tropical zero.
  constexpr TropValue() noexcept = default;

  /// IEEE infinities map onto the tagged infinities; NaN is rejected.
  constexpr TropValue(double v) {  // NOLINT(google-explicit-constructor)
    if (v != v) throw std::invalid_argument("TropValue: NaN is not an element");
    if (v == std::numeric_limits<double>::infinity()) {
      kind_ = Kind::PosInf;
    } else if (v == -std::numeric_limits<double>::infinity()) {
      kind_ = Kind::NegInf;
    } else {
      kind_ = Kind::Finite;
      value_ = v;
    }
  }

  static constexpr TropValue neg_inf() noexcept { return TropValue{}; }
  static constexpr TropValue pos_inf() noexcept {
    TropValue t;
    t.kind_ = Kind::PosInf;
    return t;
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Finite payload; throws for the infinities.
  constexpr double value() const {
    if (kind_ != Kind::Finite) throw std::domain_error("TropValue: not finite");
    return value_;
  }

  /// Value as an IEEE double, infinities included.
  constexpr double to_double() const noexcept {
    switch (kind_) {
      case Kind::NegInf:
        return -std::numeric_limits<double>::infinity();
      case Kind::PosInf:
        return std::numeric_limits<double>::infinity();
      case Kind::Finite:
        break;
    }
    return value_;
  }

  friend constexpr bool operator==(TropValue a, TropValue b) noexcept {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

  friend constexpr std::weak_ordering operator<=>(TropValue a,
                                                  TropValue b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.value_ < b.value_) return std::weak_ordering::less;
    if (b.value_ < a.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  Kind kind_ = Kind::NegInf;
  double value_ = 0.0;  // always 0 for the infinities
};

inline constexpr TropValue kNegInf = TropValue::neg_inf();
inline constexpr TropValue kPosInf = TropValue::pos_inf();
inline constexpr TropValue kUnit = TropValue{0.0};

/// a ⊕ b
constexpr TropValue oplus(TropValue a, TropValue b) noexcept {
  return a < b ? b : a;
}

/// a ⊗ b, with -inf absorbing +inf.
constexpr TropValue otimes(TropValue a, TropValue b) noexcept {
  if (a.is_neg_inf() || b.is_neg_inf()) return kNegInf;
  if (a.is_pos_inf() || b.is_pos_inf()) return kPosInf;
  return TropValue{a.value() + b.value()};
}

std::string to_string(TropValue a);

using TropVector = std::vector<TropValue>;

TropVector to_trop(std::span<const double> values);
std::vector<double> to_doubles(std::span<const TropValue> values);

/// (u ⊕ v)(x) = u(x) ⊕ v(x)
TropVector oplus(std::span<const TropValue> u, std::span<const TropValue> v);

/// (λ ⊗ u)(x) = λ ⊗ u(x)
TropVector otimes(TropValue lambda, std::span<const TropValue> u);

/// Pointwise product (u ⊗ v)(x) = u(x) ⊗ v(x).
TropVector otimes(std::span<const TropValue> u, std::span<const TropValue> v);

/// ⊕ over all entries; -inf for an empty span.
TropValue fold_oplus(std::span<const TropValue> u) noexcept;

/// u ≼ v, i.e. u(x) ≤ v(x) everywhere.
bool preceq(std::span<const TropValue> u, std::span<const TropValue> v);

/// Residuation u ⊘ v = sup{λ : λ ⊗ v ≼ u}.
TropValue residual(std::span<const TropValue> u, std::span<const TropValue> v);

/// max_x |u(x) - v(x)|. Matching infinities contribute 0, mismatched ones
/// make the distance +inf.
double sup_distance(std::span<const TropValue> u, std::span<const TropValue> v);

bool all_finite(std::span<const TropValue> u) noexcept;

}  // namespace tropdyn
