#pragma once

// Finite transition systems standing in for expanding maps with a
// potential, together with the Bousch operator, its tropical adjoint and
// Birkhoff sums.
//
// A system is a digraph on states 0..n-1. The arc y -> x carries the
// potential charged when stepping from y to x: A(y) for a map, A(y0, y1)
// for a subshift of finite type.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropdyn/maxplus.hpp"
#include "tropdyn/measures.hpp"
#include "tropdyn/tropical.hpp"

namespace tropdyn {

struct Arc {
  std::size_t source;
  std::size_t target;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

class TransitionSystem {
 public:
  /// Empty system with no states; use the factories to build real ones.
  TransitionSystem() = default;

  /// Validates the arc list: indices in range, no duplicate (source,
  /// target) pair, finite weights, n ≥ 1. Arcs are stored sorted by
  /// (source, target).
  static TransitionSystem from_arcs(std::size_t n, std::vector<Arc> arcs,
                                    std::vector<std::string> labels = {});

  /// Subshift of finite type: arc i -> j wherever transition[i][j] is 1,
  /// weighted by potential[i][j]. Every row and column needs a 1.
  static TransitionSystem from_sft(
      const std::vector<std::vector<int>>& transition,
      const std::vector<std::vector<double>>& potential);

  /// Functional graph y -> image[y] with vertex potential A(y).
  static TransitionSystem from_map(std::span<const std::size_t> image,
                                   std::span<const double> potential);

  /// Markov model of the doubling map on words of length `order` (de
  /// Bruijn graph). State index = binary value of the word, first symbol
  /// most significant. The arc w -> σ(w)b carries sample(left endpoint of
  /// the cylinder [w]).
  static TransitionSystem discretize_doubling(
      unsigned order, const std::function<double(double)>& sample);

  std::size_t size() const noexcept { return n_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Every state has exactly one outgoing arc.
  bool deterministic() const noexcept { return deterministic_; }
  /// Every state has at least one incoming arc.
  bool surjective_like() const noexcept { return surjective_like_; }

  /// Indices into arcs() of the arcs ending at / leaving a state.
  std::span<const std::size_t> incoming(std::size_t x) const {
    return incoming_[x];
  }
  std::span<const std::size_t> outgoing(std::size_t y) const {
    return outgoing_[y];
  }

  /// T(y) for deterministic systems.
  std::size_t image(std::size_t y) const;

  std::optional<double> arc_weight(std::size_t source,
                                   std::size_t target) const;

  std::size_t max_in_degree() const noexcept;

  /// M(y, x) = weight of y -> x, -inf where there is no arc.
  TropMatrix weight_matrix() const;

  /// Successor lists, for graph algorithms.
  std::vector<std::vector<std::size_t>> successors() const;

  /// Same graph with every weight reduced by `delta`.
  TransitionSystem shifted(double delta) const;

  /// Same graph with the given per-arc weights (arcs() order).
  TransitionSystem with_weights(std::span<const double> weights) const;

  friend bool operator==(const TransitionSystem& a,
                         const TransitionSystem& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.labels_ == b.labels_;
  }

 private:
  void index();

  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::vector<std::size_t>> outgoing_;
  bool deterministic_ = false;
  bool surjective_like_ = false;
};

/// Orbit segment z, T(z), ..., T^n(z).
struct PathRecord {
  std::vector<std::size_t> states;

  std::size_t length() const noexcept {
    return states.empty() ? 0 : states.size() - 1;
  }
  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

/// Closed path c0 -> c1 -> ... -> c0 from a cycle listing.
PathRecord closed_path(std::span<const std::size_t> cycle);

/// Bousch operator: L(u)(x) = ⊕_{y -> x} u(y) ⊗ A(y -> x). States without a
/// predecessor get -inf.
TropVector bousch_apply(const TransitionSystem& sys,
                        std::span<const TropValue> u);

/// Tropical adjoint: L*(b)(y) = ⊕_{y -> x} A(y -> x) ⊗ b(x). The top
/// density maps to the top density.
Density adjoint_apply(const TransitionSystem& sys, const Density& b);

/// S_n A along the path. Throws InvalidInput when a step is not an arc.
double birkhoff_sum(const TransitionSystem& sys, const PathRecord& path);

/// Single strongly connected component covering every state.
bool is_irreducible(const TransitionSystem& sys);

std::vector<std::vector<std::size_t>> components(const TransitionSystem& sys);

}  // namespace tropdyn
