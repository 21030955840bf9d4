#include <doctest.h>

#include <cmath>

#include "support/systems.hpp"
#include "tropdyn/dynamics.hpp"
#include "tropdyn/errors.hpp"

using namespace tropdyn;

namespace {

TropVector tv(std::initializer_list<double> xs) {
  TropVector out;
  for (double x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("dynamics") {
  TEST_CASE("from_arcs validation") {
    CHECK_THROWS_AS(TransitionSystem::from_arcs(0, {}), InvalidInput);
    CHECK_THROWS_AS(TransitionSystem::from_arcs(2, {{0, 2, 1.0}}), InvalidInput);
    CHECK_THROWS_AS(TransitionSystem::from_arcs(2, {{0, 1, 1.0}, {0, 1, 2.0}}), InvalidInput);
    CHECK_THROWS_AS(TransitionSystem::from_arcs(1, {{0, 0, std::nan("")}}), InvalidInput);
    CHECK_THROWS_AS(TransitionSystem::from_arcs(1, {{0, 0, INFINITY}}), InvalidInput);
  }

  TEST_CASE("arcs are stored sorted") {
    const auto sys = TransitionSystem::from_arcs(2, {{1, 0, 1}, {0, 1, 2}, {0, 0, 3}});
    REQUIRE(sys.arcs().size() == 3);
    CHECK(sys.arcs()[0] == Arc{0, 0, 3});
    CHECK(sys.arcs()[2] == Arc{1, 0, 1});
  }

  TEST_CASE("from_sft examples") {
    const TransitionSystem a = fixtures::fix_a();
    CHECK(a.size() == 2);
    CHECK(a.arcs().size() == 4);
    CHECK_FALSE(a.deterministic());
    CHECK(a.surjective_like());
    CHECK(a.arc_weight(1, 1) == -3.0);

    const auto perm = TransitionSystem::from_sft({{1, 0}, {0, 1}}, {{2, 0}, {0, 5}});
    CHECK(perm.deterministic());

    CHECK_THROWS_AS(TransitionSystem::from_sft({{1, 1}, {0, 0}}, {{0, 0}, {0, 0}}),
                    InvalidInput);
    CHECK_THROWS_AS(TransitionSystem::from_sft({{1, 0}, {1, 0}}, {{0, 0}, {0, 0}}),
                    InvalidInput);
    CHECK_THROWS_AS(TransitionSystem::from_sft({{1, 2}, {1, 1}}, {{0, 0}, {0, 0}}),
                    InvalidInput);
  }

  TEST_CASE("from_map examples") {
    const TransitionSystem c = fixtures::fix_c();
    CHECK(c.arcs().size() == 3);
    CHECK(c.deterministic());
    CHECK(c.surjective_like());
    CHECK(c.image(2) == 0);

    const std::vector<std::size_t> constant{1, 1};
    const std::vector<double> zero{0, 0};
    CHECK_FALSE(TransitionSystem::from_map(constant, zero).surjective_like());

    const std::vector<std::size_t> identity{0, 1, 2};
    const std::vector<double> a{1, 2, 3};
    const auto id = TransitionSystem::from_map(identity, a);
    for (std::size_t x = 0; x < 3; ++x) CHECK(id.image(x) == x);
    CHECK(components(id).size() == 3);
  }

  TEST_CASE("discretize_doubling examples") {
    const TransitionSystem b = fixtures::fix_b();
    CHECK(b.size() == 4);
    CHECK(b.arcs().size() == 8);
    const double expected[] = {1.0, 0.0, -1.0, 0.0};
    for (const Arc& a : b.arcs()) CHECK(a.weight == doctest::Approx(expected[a.source]).epsilon(1e-12));
    CHECK(b.arc_weight(0, 0).has_value());
    CHECK(b.arc_weight(0, 1).has_value());
    CHECK(b.arc_weight(1, 2).has_value());
    CHECK_FALSE(b.arc_weight(0, 2).has_value());
    CHECK(b.labels() == std::vector<std::string>{"00", "01", "10", "11"});

    const auto k1 = TransitionSystem::discretize_doubling(1, [](double) { return 4.5; });
    CHECK(k1.size() == 2);
    CHECK(k1.arcs().size() == 4);
    for (const Arc& a : k1.arcs()) CHECK(a.weight == 4.5);

    const auto k3 = TransitionSystem::discretize_doubling(3, [](double x) { return x; });
    CHECK(k3.size() == 8);
    CHECK(k3.arcs().size() == 16);
    CHECK(k3.max_in_degree() == 2);

    CHECK_THROWS_AS(TransitionSystem::discretize_doubling(0, [](double) { return 0.0; }),
                    InvalidInput);
    CHECK_THROWS_AS(TransitionSystem::discretize_doubling(21, [](double) { return 0.0; }),
                    InvalidInput);
  }

  TEST_CASE("bousch_apply examples") {
    CHECK(bousch_apply(fixtures::fix_a(), tv({0, -1})) == tv({0, -1}));
    CHECK(bousch_apply(fixtures::fix_a(), TropVector(2, kNegInf)) == TropVector(2, kNegInf));
    CHECK(bousch_apply(fixtures::fix_c().shifted(2), tv({0, -1, -1})) == tv({0, -1, -1}));
    CHECK_THROWS_AS(bousch_apply(fixtures::fix_a(), tv({0})), InvalidInput);
  }

  TEST_CASE("bousch_apply without predecessors gives -inf") {
    const std::vector<std::size_t> constant{1, 1};
    const std::vector<double> zero{0, 0};
    const auto sys = TransitionSystem::from_map(constant, zero);
    CHECK(bousch_apply(sys, tv({0, 0})) == TropVector{kNegInf, kUnit});
  }

  TEST_CASE("adjoint_apply examples") {
    const Density b(tv({0, -1}));
    CHECK(adjoint_apply(fixtures::fix_a(), b) == b);
    const Density c(tv({0, 1, 1}));
    CHECK(adjoint_apply(fixtures::fix_c().shifted(2), c) == c);
    CHECK(adjoint_apply(fixtures::fix_a(), Density::bottom(2)) == Density::bottom(2));
    CHECK(adjoint_apply(fixtures::fix_a(), Density::top(2)).is_top());
  }

  TEST_CASE("birkhoff_sum examples") {
    CHECK(birkhoff_sum(fixtures::fix_c(), PathRecord{{0, 1, 2}}) == 3.0);
    CHECK(birkhoff_sum(fixtures::fix_c(), PathRecord{{1}}) == 0.0);
    CHECK(birkhoff_sum(fixtures::fix_a(), PathRecord{{0, 1, 0}}) == -2.0);
    CHECK_THROWS_AS(birkhoff_sum(fixtures::fix_c(), PathRecord{{0, 2}}), InvalidInput);
  }

  TEST_CASE("closed_path") {
    const std::vector<std::size_t> cycle{2, 0};
    CHECK(closed_path(cycle).states == std::vector<std::size_t>{2, 0, 2});
    CHECK(closed_path(cycle).length() == 2);
  }

  TEST_CASE("irreducibility") {
    CHECK(is_irreducible(fixtures::fix_a()));
    CHECK(is_irreducible(fixtures::one_state(3)));
    CHECK_FALSE(is_irreducible(TransitionSystem::from_arcs(1, {})));
    CHECK_FALSE(is_irreducible(TransitionSystem::from_arcs(2, {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}})));
  }

  TEST_CASE("operator laws on seeded systems") {
    fixtures::Sampler s(41);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const TransitionSystem sys = fixtures::seeded(seed);
      const std::size_t n = sys.size();
      for (int k = 0; k < 20; ++k) {
        const TropVector u = s.vector(n, false), v = s.vector(n, false);
        const TropValue lambda{static_cast<double>(s.integer(-5, 5))};
        REQUIRE(bousch_apply(sys, oplus(u, v)) ==
                oplus(bousch_apply(sys, u), bousch_apply(sys, v)));
        REQUIRE(bousch_apply(sys, otimes(lambda, std::span<const TropValue>(u))) ==
                otimes(lambda, bousch_apply(sys, u)));
        // monotonicity
        const TropVector w = oplus(u, v);
        REQUIRE(preceq(bousch_apply(sys, u), bousch_apply(sys, w)));
        // nonexpansiveness
        const TropVector f = s.finite_vector(n), g = s.finite_vector(n);
        REQUIRE(sup_distance(bousch_apply(sys, f), bousch_apply(sys, g)) <=
                sup_distance(f, g));
        // adjoint duality
        const Density b(s.vector(n, false));
        const TropValue lhs = fold_oplus(otimes(bousch_apply(sys, u), b.values()));
        const TropValue rhs = fold_oplus(otimes(std::span<const TropValue>(u),
                                                adjoint_apply(sys, b).values()));
        REQUIRE(lhs == rhs);
      }
    }
  }
}
