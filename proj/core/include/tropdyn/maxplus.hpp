#pragma once

// Dense max-plus matrices: products, Kleene closure, maximum cycle mean and
// the spectral problem. Entry (i, j) is the weight of the arc i -> j and
// -inf means "no arc".

#include <cstddef>
#include <span>
#include <vector>

#include "tropdyn/tropical.hpp"

namespace tropdyn {

class TropMatrix {
 public:
  TropMatrix() = default;
  explicit TropMatrix(std::size_t n, TropValue fill = kNegInf)
      : n_(n), data_(n * n, fill) {}

  /// Square table of rows; +inf entries are rejected.
  static TropMatrix from_rows(const std::vector<std::vector<TropValue>>& rows);

  /// 0 on the diagonal, -inf elsewhere.
  static TropMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  TropValue operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  TropValue& operator()(std::size_t i, std::size_t j) {
    return data_[i * n_ + j];
  }

  std::span<const TropValue> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  TropVector column(std::size_t j) const;

  /// Every finite entry reduced by `delta`.
  TropMatrix shifted(double delta) const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<TropValue> data_;
};

/// out(j) = ⊕_i M(i, j) ⊗ v(i): the push-forward of v along the arcs.
TropVector mat_vec(const TropMatrix& m, std::span<const TropValue> v);

/// (A ⊗ B)(i, j) = ⊕_k A(i, k) ⊗ B(k, j)
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

/// Entrywise ⊕.
TropMatrix mat_oplus(const TropMatrix& a, const TropMatrix& b);

/// Largest |a(i,j) - b(i,j)| over the entries, infinities as in sup_distance.
double sup_distance(const TropMatrix& a, const TropMatrix& b);

struct CycleMeanResult {
  TropValue mean;                    ///< -inf for an acyclic matrix
  std::vector<std::size_t> witness;  ///< cycle states, start not repeated
};

/// Karp's maximum cycle mean. The witness is the shortest critical cycle
/// through the lowest-index critical node.
CycleMeanResult max_cycle_mean(const TropMatrix& m, double tol = kDefaultTol);

/// M⁺ = ⊕_{k≥1} M^k by Floyd–Warshall. Throws PositiveCycleError when some
/// cycle mean exceeds `tol`.
TropMatrix kleene_plus(const TropMatrix& m, double tol = kDefaultTol);

/// { i : |M⁺(i, i)| ≤ tol } for a normalized matrix.
std::vector<std::size_t> critical_nodes(const TropMatrix& m,
                                        double tol = kDefaultTol);

/// Strongly connected components of the critical graph, whose arcs are the
/// (i, j) with M(i, j) + M⁺(j, i) = 0 within tol. `closure` must be M⁺.
std::vector<std::vector<std::size_t>> critical_classes(
    const TropMatrix& m, const TropMatrix& closure, double tol = kDefaultTol);

/// Adjacency lists of the critical graph described above.
std::vector<std::vector<std::size_t>> critical_graph(
    const TropMatrix& m, const TropMatrix& closure, double tol = kDefaultTol);

struct EigenResult {
  TropValue eigenvalue;
  /// One eigenvector per critical class: row (M - λ)⁺(rep, ·) of the
  /// class's lowest-index member. Satisfies mat_vec(M, v) = λ ⊗ v.
  std::vector<TropVector> basis;
  std::vector<std::vector<std::size_t>> classes;
};

EigenResult eigenproblem(const TropMatrix& m, double tol = kDefaultTol);

}  // namespace tropdyn
