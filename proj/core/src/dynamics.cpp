#include "tropdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tropdyn/errors.hpp"
#include "tropdyn/graph.hpp"

namespace tropdyn {

TransitionSystem TransitionSystem::from_arcs(std::size_t n,
                                             std::vector<Arc> arcs,
                                             std::vector<std::string> labels) {
  if (n == 0) throw InvalidInput("system: state count must be positive");
  if (!labels.empty() && labels.size() != n) {
    throw InvalidInput("system: " + std::to_string(labels.size()) +
                       " labels for " + std::to_string(n) + " states");
  }
  for (const Arc& a : arcs) {
    if (a.source >= n || a.target >= n) {
      throw InvalidInput("system: arc " + std::to_string(a.source) + " -> " +
                         std::to_string(a.target) + " leaves the state set");
    }
    if (!std::isfinite(a.weight)) {
      throw InvalidInput("system: arc " + std::to_string(a.source) + " -> " +
                         std::to_string(a.target) + " has a non-finite weight");
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    if (arcs[i].source == arcs[i - 1].source &&
        arcs[i].target == arcs[i - 1].target) {
      throw InvalidInput("system: duplicate arc " +
                         std::to_string(arcs[i].source) + " -> " +
                         std::to_string(arcs[i].target));
    }
  }
  TransitionSystem sys;
  sys.n_ = n;
  sys.arcs_ = std::move(arcs);
  sys.labels_ = std::move(labels);
  sys.index();
  return sys;
}

void TransitionSystem::index() {
  incoming_.assign(n_, {});
  outgoing_.assign(n_, {});
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    outgoing_[arcs_[i].source].push_back(i);
    incoming_[arcs_[i].target].push_back(i);
  }
  deterministic_ = std::all_of(outgoing_.begin(), outgoing_.end(),
                               [](const auto& o) { return o.size() == 1; });
  surjective_like_ = std::all_of(incoming_.begin(), incoming_.end(),
                                 [](const auto& in) { return !in.empty(); });
}

TransitionSystem TransitionSystem::from_sft(
    const std::vector<std::vector<int>>& transition,
    const std::vector<std::vector<double>>& potential) {
  const std::size_t n = transition.size();
  if (n == 0) throw InvalidInput("sft: empty transition matrix");
  if (potential.size() != n)
    throw InvalidInput("sft: potential and transition matrix differ in size");
  std::vector<bool> column_hit(n, false);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    if (transition[i].size() != n || potential[i].size() != n)
      throw InvalidInput("sft: row " + std::to_string(i) + " is not of length " +
                         std::to_string(n));
    bool row_hit = false;
    for (std::size_t j = 0; j < n; ++j) {
      const int t = transition[i][j];
      if (t != 0 && t != 1)
        throw InvalidInput("sft: transition entries must be 0 or 1");
      if (t == 1) {
        arcs.push_back({i, j, potential[i][j]});
        row_hit = true;
        column_hit[j] = true;
      }
    }
    if (!row_hit)
      throw InvalidInput("sft: row " + std::to_string(i) + " has no allowed transition");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!column_hit[j])
      throw InvalidInput("sft: column " + std::to_string(j) +
                         " has no allowed transition");
  }
  return from_arcs(n, std::move(arcs));
}

TransitionSystem TransitionSystem::from_map(std::span<const std::size_t> image,
                                            std::span<const double> potential) {
  if (image.size() != potential.size())
    throw InvalidInput("map: image table and potential differ in length");
  std::vector<Arc> arcs;
  arcs.reserve(image.size());
  for (std::size_t y = 0; y < image.size(); ++y)
    arcs.push_back({y, image[y], potential[y]});
  return from_arcs(image.size(), std::move(arcs));
}

TransitionSystem TransitionSystem::discretize_doubling(
    unsigned order, const std::function<double(double)>& sample) {
  if (order < 1 || order > 20)
    throw InvalidInput("discretize_doubling: order must be in [1, 20]");
  const std::size_t n = std::size_t{1} << order;
  const std::size_t mask = n - 1;
  std::vector<Arc> arcs;
  arcs.reserve(2 * n);
  std::vector<std::string> labels(n);
  for (std::size_t w = 0; w < n; ++w) {
    const double weight = sample(static_cast<double>(w) / static_cast<double>(n));
    for (std::size_t bit = 0; bit < 2; ++bit)
      arcs.push_back({w, ((w << 1) & mask) | bit, weight});
    for (unsigned k = 0; k < order; ++k)
      labels[w].push_back(((w >> (order - 1 - k)) & 1U) ? '1' : '0');
  }
  return from_arcs(n, std::move(arcs), std::move(labels));
}

std::size_t TransitionSystem::image(std::size_t y) const {
  if (!deterministic_)
    throw AssumptionViolation("image: system is not deterministic");
  return arcs_[outgoing_[y].front()].target;
}

std::optional<double> TransitionSystem::arc_weight(std::size_t source,
                                                   std::size_t target) const {
  if (source >= n_ || target >= n_) return std::nullopt;
  for (std::size_t a : outgoing_[source]) {
    if (arcs_[a].target == target) return arcs_[a].weight;
  }
  return std::nullopt;
}

std::size_t TransitionSystem::max_in_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& in : incoming_) best = std::max(best, in.size());
  return best;
}

TropMatrix TransitionSystem::weight_matrix() const {
  TropMatrix m(n_);
  for (const Arc& a : arcs_) m(a.source, a.target) = TropValue{a.weight};
  return m;
}

std::vector<std::vector<std::size_t>> TransitionSystem::successors() const {
  std::vector<std::vector<std::size_t>> out(n_);
  for (const Arc& a : arcs_) out[a.source].push_back(a.target);
  return out;
}

TransitionSystem TransitionSystem::shifted(double delta) const {
  TransitionSystem out = *this;
  for (Arc& a : out.arcs_) a.weight -= delta;
  return out;
}

TransitionSystem TransitionSystem::with_weights(
    std::span<const double> weights) const {
  if (weights.size() != arcs_.size())
    throw InvalidInput("with_weights: expected one weight per arc");
  std::vector<Arc> arcs = arcs_;
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].weight = weights[i];
  return from_arcs(n_, std::move(arcs), labels_);
}

PathRecord closed_path(std::span<const std::size_t> cycle) {
  PathRecord p{{cycle.begin(), cycle.end()}};
  if (!cycle.empty()) p.states.push_back(cycle.front());
  return p;
}

TropVector bousch_apply(const TransitionSystem& sys,
                        std::span<const TropValue> u) {
  if (u.size() != sys.size())
    throw InvalidInput("bousch_apply: vector length " + std::to_string(u.size()) +
                       " does not match " + std::to_string(sys.size()) + " states");
  TropVector out(sys.size(), kNegInf);
  for (const Arc& a : sys.arcs())
    out[a.target] = oplus(out[a.target], otimes(u[a.source], TropValue{a.weight}));
  return out;
}

Density adjoint_apply(const TransitionSystem& sys, const Density& b) {
  if (b.size() != sys.size())
    throw InvalidInput("adjoint_apply: density length " + std::to_string(b.size()) +
                       " does not match " + std::to_string(sys.size()) + " states");
  if (b.is_top()) return Density::top(sys.size());
  TropVector out(sys.size(), kNegInf);
  for (const Arc& a : sys.arcs())
    out[a.source] = oplus(out[a.source], otimes(TropValue{a.weight}, b[a.target]));
  return Density(std::move(out));
}

double birkhoff_sum(const TransitionSystem& sys, const PathRecord& path) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < path.states.size(); ++i) {
    const auto w = sys.arc_weight(path.states[i], path.states[i + 1]);
    if (!w) {
      throw InvalidInput("birkhoff_sum: " + std::to_string(path.states[i]) +
                         " -> " + std::to_string(path.states[i + 1]) +
                         " is not an arc");
    }
    sum += *w;
  }
  if (path.states.size() == 1 && path.states.front() >= sys.size())
    throw InvalidInput("birkhoff_sum: unknown state");
  return sum;
}

std::vector<std::vector<std::size_t>> components(const TransitionSystem& sys) {
  return strongly_connected_components(sys.successors());
}

bool is_irreducible(const TransitionSystem& sys) {
  if (components(sys).size() != 1) return false;
  // A single state is irreducible only with its self-loop.
  return sys.size() > 1 || sys.arc_weight(0, 0).has_value();
}

}  // namespace tropdyn
