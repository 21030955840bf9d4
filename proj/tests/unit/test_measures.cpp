#include <doctest.h>

#include <cmath>

#include "support/systems.hpp"
#include "tropdyn/errors.hpp"
#include "tropdyn/measures.hpp"

using namespace tropdyn;

namespace {

Density d(std::initializer_list<TropValue> v) { return Density(TropVector(v)); }

TransitionSystem three_cycle() {
  const std::vector<std::size_t> image{1, 2, 0};
  const std::vector<double> a{0, 0, 0};
  return TransitionSystem::from_map(image, a);
}

TransitionSystem two_two_cycles() {
  const std::vector<std::size_t> image{1, 0, 3, 2};
  const std::vector<double> a{0, 0, 0, 0};
  return TransitionSystem::from_map(image, a);
}

}  // namespace

TEST_SUITE("tropical_measures") {
  TEST_CASE("Density rejects +inf entries") {
    CHECK_THROWS_AS(d({kUnit, kPosInf}), InvalidInput);
    CHECK(Density::top(2).is_top());
    CHECK_FALSE(Density::bottom(2).is_top());
  }

  TEST_CASE("functional_eval examples") {
    const TropicalFunctional l(d({kUnit, TropValue{-1}}));
    CHECK(functional_eval(l, TropVector{kUnit, kUnit}) == kUnit);
    CHECK(functional_eval(l, TropVector{TropValue{-5}, TropValue{3}}) == TropValue{2});
    const TropicalFunctional zero(Density::bottom(2));
    CHECK(functional_eval(zero, TropVector{TropValue{4}, TropValue{-1}}) == kNegInf);
    CHECK_THROWS_AS(functional_eval(l, TropVector{kUnit}), InvalidInput);
  }

  TEST_CASE("top functional") {
    const TropicalFunctional top(Density::top(2));
    CHECK(top(TropVector{kUnit, kUnit}) == kPosInf);
    CHECK(top(TropVector{kNegInf, kNegInf}) == kNegInf);
  }

  TEST_CASE("measure_of examples") {
    const Density b = d({kUnit, TropValue{-1}});
    const std::vector<std::size_t> both{0, 1}, second{1}, none{};
    CHECK(measure_of(b, both) == kUnit);
    CHECK(measure_of(b, none) == kNegInf);
    CHECK(measure_of(b, second) == TropValue{-1});
    const std::vector<std::size_t> bad{2};
    CHECK_THROWS_AS(measure_of(b, bad), InvalidInput);
  }

  TEST_CASE("tropical_integral examples") {
    const Density b = d({kUnit, TropValue{-1}});
    const TropVector f{TropValue{1}, TropValue{5}};
    const std::vector<std::size_t> all{0, 1}, second{1}, none{};
    CHECK(tropical_integral(b, f, all) == functional_eval(TropicalFunctional(b), f));
    CHECK(tropical_integral(b, f, second) == TropValue{4});
    CHECK(tropical_integral(b, f, none) == kNegInf);
    const std::vector<std::size_t> bad{5};
    CHECK_THROWS_AS(tropical_integral(b, f, bad), InvalidInput);
  }

  TEST_CASE("is_invariant examples") {
    const TransitionSystem sys = three_cycle();
    CHECK(is_invariant(sys, d({kUnit, kUnit, kUnit})));
    CHECK_FALSE(is_invariant(sys, d({kUnit, TropValue{-1}, kUnit})));
    CHECK(is_invariant(sys, Density::bottom(3)));
    CHECK_THROWS_AS(is_invariant(fixtures::fix_a(), Density::bottom(2)), AssumptionViolation);
  }

  TEST_CASE("is_ergodic examples") {
    CHECK(is_ergodic(three_cycle(), d({kUnit, kUnit, kUnit})));
    const Density split = d({kUnit, kUnit, TropValue{-3}, TropValue{-3}});
    CHECK(is_invariant(two_two_cycles(), split));
    CHECK_FALSE(is_ergodic(two_two_cycles(), split));
    CHECK(is_ergodic(three_cycle(), Density::bottom(3)));
    CHECK_THROWS_AS(is_ergodic(three_cycle(), d({kUnit, TropValue{-1}, kUnit})),
                    InvalidInput);
  }

  TEST_CASE("is_ergodic with a transient state") {
    // 0 -> 1 -> 1: invariance forces b(0) = -inf, but the orbit of 0
    // settles at b(1) = 0.
    const std::vector<std::size_t> image{1, 1};
    const std::vector<double> a{0, 0};
    const TransitionSystem sys = TransitionSystem::from_map(image, a);
    const Density b = d({kNegInf, kUnit});
    CHECK(is_invariant(sys, b));
    CHECK_FALSE(is_ergodic(sys, b));
  }

  TEST_CASE("densities_equivalent examples") {
    const Density b1 = d({kUnit, TropValue{-1}});
    CHECK(densities_equivalent(b1, b1));
    const Density b2 = d({kUnit, TropValue{-2}});
    const std::vector<TropVector> second{TropVector{kNegInf, kUnit}};
    CHECK_FALSE(densities_equivalent(b1, b2, second));
    CHECK_FALSE(densities_equivalent(b1, b2));
    const std::vector<TropVector> zero{TropVector{kUnit, kUnit}};
    CHECK(densities_equivalent(Density::top(2), Density::top(2), zero));
    CHECK_FALSE(densities_equivalent(b1, Density::top(2), zero));
  }

  TEST_CASE("singleton probes") {
    const auto probes = singleton_probes(3);
    REQUIRE(probes.size() == 3);
    CHECK(probes[1] == TropVector{kNegInf, kUnit, kNegInf});
  }

  TEST_CASE("finite additivity of measure_of") {
    fixtures::Sampler s(21);
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = 5;
      const Density b(s.vector(n, false));
      std::vector<std::size_t> s1, s2, both;
      for (std::size_t x = 0; x < n; ++x) {
        const bool in1 = s.integer(0, 1), in2 = s.integer(0, 1);
        if (in1) s1.push_back(x);
        if (in2) s2.push_back(x);
        if (in1 || in2) both.push_back(x);
      }
      REQUIRE(measure_of(b, both) == oplus(measure_of(b, s1), measure_of(b, s2)));
    }
  }

  TEST_CASE("singleton probes separate distinct densities") {
    fixtures::Sampler s(22);
    for (int i = 0; i < 500; ++i) {
      const Density b1(s.vector(4, false)), b2(s.vector(4, false));
      REQUIRE(densities_equivalent(b1, b2) == (b1 == b2));
    }
  }

  TEST_CASE("functionals are 1-Lipschitz and tropically linear") {
    fixtures::Sampler s(23);
    for (int i = 0; i < 500; ++i) {
      TropVector bv = s.vector(4, false);
      bv[0] = TropValue{static_cast<double>(s.integer(-5, 5))};  // not the bottom
      const TropicalFunctional l{Density(bv)};
      const TropVector f = s.finite_vector(4), g = s.finite_vector(4);
      const double gap = std::abs(l(f).value() - l(g).value());
      REQUIRE(gap <= sup_distance(f, g));
      REQUIRE(l(oplus(f, g)) == oplus(l(f), l(g)));
      const TropValue lambda{static_cast<double>(s.integer(-3, 3))};
      REQUIRE(l(otimes(lambda, std::span<const TropValue>(f))) == otimes(lambda, l(f)));
    }
  }
}
