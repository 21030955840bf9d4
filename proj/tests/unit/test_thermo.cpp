#include <doctest.h>

#include <cmath>
#include <numeric>

#include "support/systems.hpp"
#include "tropdyn/errors.hpp"
#include "tropdyn/thermo.hpp"

using namespace tropdyn;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// (1/β) log R_{βA}(e^{βf})
std::vector<double> scaled_ruelle(const TransitionSystem& sys, std::span<const TropValue> f,
                                  double beta) {
  std::vector<double> lf(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) lf[x] = beta * f[x].value();
  std::vector<double> out = log_ruelle_apply(sys, lf, beta);
  for (double& x : out) x /= beta;
  return out;
}

}  // namespace

TEST_SUITE("thermo") {
  TEST_CASE("ruelle_apply examples") {
    const std::vector<double> ones{1, 1};
    const auto shift = ruelle_apply(fixtures::full_shift_zero(), ones, 3.0);
    CHECK(shift == std::vector<double>{2, 2});

    const auto a = ruelle_apply(fixtures::fix_a(), ones, 1.0);
    CHECK(a[0] == doctest::Approx(1 + std::exp(-1.0)).epsilon(1e-15));
    CHECK(a[1] == doctest::Approx(std::exp(-1.0) + std::exp(-3.0)).epsilon(1e-15));

    const std::vector<double> u{2.5};
    CHECK(ruelle_apply(fixtures::one_state(0.5), u, 2.0)[0] ==
          doctest::Approx(2.5 * std::exp(1.0)));

    const std::vector<double> bad{1, 0};
    CHECK_THROWS_AS(ruelle_apply(fixtures::fix_a(), bad, 1.0), InvalidInput);
    CHECK_THROWS_AS(ruelle_apply(fixtures::fix_a(), ones, 0.0), InvalidInput);
  }

  TEST_CASE("log_ruelle_apply matches ruelle_apply") {
    const std::vector<double> u{0.3, 2.0};
    const std::vector<double> lu{std::log(0.3), std::log(2.0)};
    const auto direct = ruelle_apply(fixtures::fix_a(), u, 1.7);
    const auto logged = log_ruelle_apply(fixtures::fix_a(), lu, 1.7);
    for (std::size_t x = 0; x < 2; ++x)
      CHECK(std::exp(logged[x]) == doctest::Approx(direct[x]).epsilon(1e-14));
  }

  TEST_CASE("spectral_data examples") {
    const SpectralData shift = spectral_data(fixtures::full_shift_zero(), 4.0);
    CHECK(shift.pressure == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(shift.m()[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(shift.u()[0] == doctest::Approx(shift.u()[1]).epsilon(1e-12));

    const SpectralData one = spectral_data(fixtures::one_state(1.5), 3.0);
    CHECK(one.pressure == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(one.u()[0] == doctest::Approx(1.0));
    CHECK(one.m()[0] == doctest::Approx(1.0));
    CHECK(one.mu()[0] == doctest::Approx(1.0));

    const SpectralData a = spectral_data(fixtures::fix_a(), 2.0);
    CHECK(a.pressure / 2.0 > 0.0);
    CHECK(a.pressure / 2.0 <= std::log(2.0) / 2.0);
  }

  TEST_CASE("spectral_data errors") {
    const auto reducible = TransitionSystem::from_arcs(2, {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    try {
      spectral_data(reducible, 1.0);
      FAIL("expected a reducibility error");
    } catch (const ReducibleSystemError& e) {
      CHECK(e.components().size() == 2);
    }
    CHECK_THROWS_AS(spectral_data(fixtures::fix_a(), 2500.0), InvalidInput);
    CHECK_THROWS_AS(spectral_data(fixtures::fix_a(), -1.0), InvalidInput);
    SpectralOptions few;
    few.max_iterations = 1;
    few.log_u_start = std::vector<double>{0.0, 50.0};
    CHECK_THROWS_AS(spectral_data(fixtures::fix_a(), 1.0, few), ConvergenceError);
  }

  TEST_CASE("spectral invariants on seeded systems") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const TransitionSystem sys = fixtures::seeded(seed);
      for (double beta : {0.5, 3.0}) {
        const SpectralData d = spectral_data(sys, beta);
        const auto u = d.u(), m = d.m(), mu = d.mu();
        const auto ru = ruelle_apply(sys, u, beta);
        const double root = std::exp(d.pressure);
        for (std::size_t x = 0; x < sys.size(); ++x)
          REQUIRE(ru[x] == doctest::Approx(root * u[x]).epsilon(1e-9));
        const auto mr = log_ruelle_adjoint_apply(sys, d.log_m, beta);
        for (std::size_t x = 0; x < sys.size(); ++x)
          REQUIRE(mr[x] == doctest::Approx(d.pressure + d.log_m[x]).epsilon(1e-9));
        REQUIRE(sum(m) == doctest::Approx(1.0).epsilon(1e-12));
        REQUIRE(sum(mu) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("normalized_potential examples") {
    const auto shift = fixtures::full_shift_zero();
    for (double g : normalized_potential(shift, spectral_data(shift, 2.0)))
      CHECK(g == doctest::Approx(-std::log(2.0)).epsilon(1e-12));

    const auto one = fixtures::one_state(3.0);
    CHECK(normalized_potential(one, spectral_data(one, 5.0))[0] ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("stochasticity of the normalized potential") {
    std::vector<TransitionSystem> systems{fixtures::fix_a()};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) systems.push_back(fixtures::seeded(seed));
    for (const auto& sys : systems) {
      for (double beta : {5.0, 100.0}) {
        const SpectralData d = spectral_data(sys, beta);
        const auto g = normalized_potential(sys, d);
        std::vector<double> total(sys.size(), 0.0);
        for (std::size_t i = 0; i < g.size(); ++i) total[sys.arcs()[i].target] += std::exp(g[i]);
        for (double t : total) REQUIRE(std::abs(t - 1.0) <= 1e-10);
        // μ is fixed by the adjoint of the normalized operator.
        const auto mu = d.mu();
        std::vector<double> pushed(sys.size(), 0.0);
        for (std::size_t i = 0; i < g.size(); ++i)
          pushed[sys.arcs()[i].source] += std::exp(g[i]) * mu[sys.arcs()[i].target];
        for (std::size_t x = 0; x < sys.size(); ++x)
          REQUIRE(std::abs(pushed[x] - mu[x]) <= 1e-10);
      }
    }
  }

  TEST_CASE("log_moment examples") {
    const std::vector<double> uniform{0.5, 0.5}, skew{0.9, 0.1};
    const std::vector<double> c{2.0, 2.0};
    CHECK(log_moment(skew, c, 7.0) == doctest::Approx(2.0).epsilon(1e-14));
    const std::vector<double> f{0.0, 1.0};
    CHECK(log_moment(uniform, f, 1.0) ==
          doctest::Approx(std::log((1 + std::exp(1.0)) / 2)).epsilon(1e-14));
    CHECK(std::log((1 + std::exp(1.0)) / 2) == doctest::Approx(0.6201).epsilon(1e-4));
    double previous = -INFINITY;
    for (double beta : {1.0, 10.0, 100.0, 1000.0}) {
      const double v = log_moment(uniform, f, beta);
      CHECK(v > previous);
      CHECK(v <= 1.0);
      previous = v;
    }
    CHECK(previous == doctest::Approx(1.0).epsilon(1e-3));
    const std::vector<double> negative{-0.5, 1.5};
    CHECK_THROWS_AS(log_moment(negative, f, 1.0), InvalidInput);
  }

  TEST_CASE("operator and pressure bracketing") {
    fixtures::Sampler s(61);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const TransitionSystem sys = fixtures::seeded(seed);
      const double log_n = std::log(static_cast<double>(sys.max_in_degree()));
      const double q = max_potential_energy(sys).q;
      for (double beta : {10.0, 100.0, 1000.0}) {
        for (int k = 0; k < 5; ++k) {
          const TropVector f = s.finite_vector(sys.size(), -5, 5);
          const TropVector lf = bousch_apply(sys, f);
          const auto r = scaled_ruelle(sys, f, beta);
          for (std::size_t x = 0; x < sys.size(); ++x) {
            REQUIRE(lf[x].value() <= r[x] + 1e-9);
            REQUIRE(r[x] <= lf[x].value() + log_n / beta + 1e-9);
          }
        }
        const double p = spectral_data(sys, beta).pressure / beta;
        REQUIRE(q - 1e-9 <= p);
        REQUIRE(p <= q + log_n / beta + 1e-9);
      }
    }
  }

  TEST_CASE("seeded restarts agree") {
    fixtures::Sampler s(62);
    for (const auto& sys : fixtures::uniquely_calibrated(10)) {
      for (double beta : {1.0, 10.0}) {
        const SpectralData base = spectral_data(sys, beta);
        SpectralOptions opts;
        opts.log_u_start = s.reals(sys.size(), -3, 3);
        opts.log_m_start = s.reals(sys.size(), -3, 3);
        const SpectralData other = spectral_data(sys, beta, opts);
        REQUIRE(std::abs(base.pressure - other.pressure) <= 1e-9);
        for (std::size_t x = 0; x < sys.size(); ++x) {
          REQUIRE(std::abs(base.log_u[x] - other.log_u[x]) <= 1e-9);
          REQUIRE(std::abs(base.log_mu[x] - other.log_mu[x]) <= 1e-9);
        }
      }
    }
  }

  TEST_CASE("periodic system converges") {
    const auto sys = TransitionSystem::from_arcs(2, {{0, 1, 1.0}, {1, 0, -1.0}});
    const SpectralData d = spectral_data(sys, 10.0);
    CHECK(d.pressure == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.mu()[0] == doctest::Approx(0.5).epsilon(1e-12));
  }
}
