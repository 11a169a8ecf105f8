#include <doctest.h>

#include <algorithm>

#include "core/builtin_checks.hpp"
#include "core/errors.hpp"
#include "core/pruning.hpp"
#include "test_support.hpp"

using namespace stairprune;
using namespace test_support;

TEST_SUITE("pruning basics") {
  TEST_CASE("scale zero changes nothing") {
    SplitMix64 rng(1200);
    for (int instance = 0; instance < 10; ++instance) {
      const Module m = random_module(rng.next(), 1 + static_cast<int>(rng.next() % 4), 2, 3, 8);
      CHECK(prune(m, rat(0)) == m);
      CHECK(prune_iterative(m, rat(0)) == m);
    }
    const Module sharp = sharp_family_m(3, 2, rat(1));
    CHECK(prune(sharp, rat(0)) == sharp);
  }

  TEST_CASE("zero module passes through") {
    CHECK(prune(Module(2, {}), rat(1)).is_zero());
    CHECK(prune_iterative_components(Module(2, {}), rat(1)).components.empty());
  }

  TEST_CASE("negative alpha is rejected") {
    CHECK_THROWS_AS(prune(mod(2, {{{0, 0}}}), rat(-1)), validation_error);
    CHECK_THROWS_AS(prune_iterative(mod(2, {{{0, 0}}}), rat(-1)), validation_error);
  }

  TEST_CASE("isolated summands just get shifted") {
    // cross thresholds are 10, far above 2*alpha = 2, so only self-loops
    const Module m = mod(2, {{{0, 10}}, {{10, 0}}});
    const auto iterative = prune_iterative_components(m, rat(1));
    CHECK(iterative.iterations == 0);
    CHECK(prune(m, rat(1)) == mod(2, {{{1, 11}}, {{11, 1}}}));
    CHECK(prune(m, rat(1)) == m.shifted(rat(-1)));
  }
}

TEST_SUITE("diagonal family pruning") {
  TEST_CASE("pruning at alpha lands on the collapsed family") {
    for (int r = 1; r <= 3; ++r)
      for (int dim = 1; dim <= 2; ++dim)
        for (const Rational& alpha : {rat(1), rat(1, 2), rat(3)}) {
          const Module m = sharp_family_m(r, dim, alpha);
          const Module expected = sharp_family_n(r, dim, alpha);
          CHECK(iso_check(prune(m, alpha), expected));
          CHECK(iso_check(prune_iterative(m, alpha), expected));
        }
  }

  TEST_CASE("iterative refinement needs exactly r - 1 rounds here") {
    for (int r = 1; r <= 5; ++r) {
      const auto result = prune_iterative_components(sharp_family_m(r, 2, rat(1)), rat(1));
      CHECK(result.iterations == r - 1);
    }
  }
}

TEST_SUITE("two routes to the pruning") {
  TEST_CASE("closed form and fixed point agree componentwise") {
    SplitMix64 rng(1300);
    for (int instance = 0; instance < 60; ++instance) {
      const int r = 1 + static_cast<int>(rng.next() % 5);
      const int dim = 1 + static_cast<int>(rng.next() % 2);
      const Module m = random_module(rng.next(), r, dim, 1 + static_cast<int>(rng.next() % 3), 8);
      const Rational alpha = random_rational(rng, 0, 8);
      const auto closed = prune_components(m, alpha);
      const auto iterative = prune_iterative_components(m, alpha);
      CHECK(closed == iterative.components);
      CHECK(iterative.iterations <= std::max(r - 1, 0));
    }
  }
}

TEST_SUITE("pruning structure") {
  TEST_CASE("components shrink as alpha grows") {
    SplitMix64 rng(1400);
    for (int instance = 0; instance < 25; ++instance) {
      const Module m = random_module(rng.next(), 4, 2, 3, 8);
      Rational a = random_rational(rng, 0, 6);
      Rational b = random_rational(rng, 0, 6);
      if (a > b) std::swap(a, b);
      const auto coarse = prune_components(m, a);
      const auto fine = prune_components(m, b);
      for (std::size_t l = 0; l < coarse.size(); ++l) CHECK(subseteq(fine[l], coarse[l]));
    }
  }

  TEST_CASE("reachability orders the components by inclusion") {
    SplitMix64 rng(1500);
    for (int instance = 0; instance < 25; ++instance) {
      const Module m = random_module(rng.next(), 5, 2, 2, 8);
      const Rational alpha = random_rational(rng, 0, 5);
      const ShiftGraph g = build_graph(m, alpha);
      const auto comps = prune_components(m, alpha);
      for (int l = 0; l < g.r; ++l)
        for (int j : g.reach[static_cast<std::size_t>(l)])
          CHECK(subseteq(comps[static_cast<std::size_t>(l)], comps[static_cast<std::size_t>(j)]));
    }
  }

  TEST_CASE("a path of length c certifies containment in the 2c alpha shift") {
    SplitMix64 rng(1600);
    for (int instance = 0; instance < 25; ++instance) {
      const Module m = random_module(rng.next(), 5, 2, 2, 8);
      const Rational alpha = random_rational(rng, 0, 5);
      const ShiftGraph g = build_graph(m, alpha);
      for (int i = 0; i < g.r; ++i)
        for (int j = 0; j < g.r; ++j) {
          const auto c = graph_distance(g, {i}, {j});
          if (!c.has_value()) continue;
          CHECK(subseteq(m.summands()[static_cast<std::size_t>(i)],
                         m.summands()[static_cast<std::size_t>(j)].shifted(2 * *c * alpha)));
        }
    }
  }

  TEST_CASE("every component sits inside its own raised summand") {
    // the intersection over the reach set includes the summand itself
    SplitMix64 rng(1700);
    for (int instance = 0; instance < 20; ++instance) {
      const Module m = random_module(rng.next(), 4, 2, 3, 8);
      const Rational alpha = random_rational(rng, 0, 5);
      const auto comps = prune_components(m, alpha);
      for (std::size_t l = 0; l < comps.size(); ++l)
        CHECK(subseteq(comps[l], m.summands()[l].shifted(-alpha)));
    }
  }
}
