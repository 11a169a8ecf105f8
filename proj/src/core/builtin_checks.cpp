#include "core/builtin_checks.hpp"

#include <functional>
#include <sstream>

#include "core/ci.hpp"
#include "core/distances.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/pruning.hpp"

namespace stairprune {

namespace {

Module diagonal_module(int r, int dim, const std::vector<Rational>& heights) {
  std::vector<Upset> summands;
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> coords(static_cast<std::size_t>(dim), heights[static_cast<std::size_t>(i)]);
    summands.push_back(Upset({Point(coords)}));
  }
  return Module(dim, std::move(summands));
}

}  // namespace

Module sharp_family_m(int r, int dim, const Rational& alpha) {
  if (r < 1 || dim < 1 || alpha <= 0) throw validation_error("need r >= 1, dim >= 1, alpha > 0");
  std::vector<Rational> heights;
  for (int i = 1; i <= r; ++i) heights.push_back(2 * i * alpha);
  return diagonal_module(r, dim, heights);
}

Module sharp_family_n(int r, int dim, const Rational& alpha) {
  if (r < 1 || dim < 1 || alpha <= 0) throw validation_error("need r >= 1, dim >= 1, alpha > 0");
  std::vector<Rational> heights(static_cast<std::size_t>(r), (2 * r + 1) * alpha);
  return diagonal_module(r, dim, heights);
}

std::pair<Module, Module> ci_cycle_instance() {
  auto up = [](std::vector<std::pair<int, int>> pts) {
    std::vector<Point> gens;
    for (auto [x, y] : pts) gens.push_back(Point({Rational(x), Rational(y)}));
    return Upset(std::move(gens));
  };
  // four interleaved staircases descending along the antidiagonal; offsets are
  // chosen so each cycle neighbour is one shift away but the way back costs 3
  Upset m1 = up({{0, 0}, {10, -6}, {19, -13}, {25, -23}});
  Upset m2 = up({{2, 2}, {8, -8}, {17, -15}, {27, -21}});
  Upset n1 = up({{1, 1}, {11, -5}, {16, -16}, {26, -22}});
  Upset n2 = up({{3, 3}, {9, -7}, {18, -14}, {24, -24}});
  return {Module(2, {m1, m2}), Module(2, {n1, n2})};
}

std::vector<CheckResult> run_builtin_checks() {
  std::vector<CheckResult> results;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (...) {
      ok = false;
    }
    results.push_back({name, ok});
  };

  const Rational tol(1, 1000000000);

  // zero-scale pruning changes nothing
  check("prune at alpha=0 is the identity", [&] {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      const Module m = random_module(seed, 3, 2, 3, 9);
      if (!iso_check(prune(m, Rational(0)), m)) return false;
    }
    return iso_check(prune(sharp_family_m(3, 2, Rational(1)), Rational(0)),
                     sharp_family_m(3, 2, Rational(1)));
  });

  // the sharp family: pruning collapses the first module onto the second
  for (int r : {1, 2, 3, 4})
    for (int dim : {1, 2, 3})
      for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(3)}) {
        std::ostringstream name;
        name << "sharp family r=" << r << " d=" << dim << " alpha=" << rational_to_string(alpha);
        check(name.str() + ": prune(M, alpha) isomorphic to N", [&, r, dim, alpha] {
          return iso_check(prune(sharp_family_m(r, dim, alpha), alpha),
                           sharp_family_n(r, dim, alpha));
        });
      }

  // distances on the sharp family at one representative corner of the grid
  {
    const int r = 3;
    const Rational alpha(1);
    const Module m = sharp_family_m(r, 2, alpha);
    const Module n = sharp_family_n(r, 2, alpha);
    check("sharp family: pruning distance equals alpha (exact mode)", [&] {
      const auto d = pruning_distance(m, n, tol, PruningDistanceMode::exact);
      return d.finite && d.exact && d.value == alpha;
    });
    check("sharp family: bottleneck distance equals (2r-1)*alpha", [&] {
      const auto d = bottleneck_distance(m, n);
      return d.finite && d.exact && d.value == (2 * r - 1) * alpha;
    });
    check("sharp family: brute-force bottleneck agrees", [&] {
      const auto d = bottleneck_bruteforce(m, n);
      return d.finite && d.exact && d.value == (2 * r - 1) * alpha;
    });
    check("sharp family: refinement predicate holds at alpha", [&] {
      return refinement_all_delta(m, n, alpha);
    });
    check("sharp family: refinement predicate fails at alpha/2", [&] {
      return !refinement_all_delta(m, n, alpha / 2);
    });
    check("sharp family: pruned module refines N, and N refines M", [&] {
      return inf_refinement(prune(m, alpha), n) && inf_refinement(n, m);
    });
    check("sharp family: half-scale pruning does not refine N", [&] {
      return !inf_refinement(prune(m, alpha / 2), n);
    });
  }

  // interleaving on the sharp family, exact for small r
  for (int r : {1, 2, 3})
    for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(3)}) {
      std::ostringstream name;
      name << "sharp family r=" << r << " alpha=" << rational_to_string(alpha)
           << ": interleaving distance equals (2r-1)*alpha";
      check(name.str(), [&, r, alpha] {
        const auto d = interleaving_distance_bruteforce(sharp_family_m(r, 2, alpha),
                                                        sharp_family_n(r, 2, alpha), Field::f2);
        return d.finite && d.exact && d.value == (2 * r - 1) * alpha;
      });
    }

  check("mismatched summand counts give infinite distances", [&] {
    const Module a = sharp_family_m(2, 2, Rational(1));
    const Module b = sharp_family_m(3, 2, Rational(1));
    return !pruning_distance(a, b, tol).finite && !bottleneck_distance(a, b).finite;
  });

  check("serialization round-trip preserves the sharp family", [&] {
    const Module m = sharp_family_m(3, 2, Rational(1));
    return parse_module_json(module_to_json(m)) == m;
  });

  check("pruning distance bounds the bottleneck distance on random pairs", [&] {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const int r = 1 + static_cast<int>(seed % 4);
      const Module a = random_module(1000 + 2 * seed, r, 2, 3, 9);
      const Module b = random_module(1001 + 2 * seed, r, 2, 3, 9);
      const auto dp = pruning_distance(a, b, tol);
      const auto db = bottleneck_distance(a, b);
      if (!dp.finite || !db.finite) return false;
      if (dp.value - tol > db.value) return false;
      if (db.value > (2 * r - 1) * (dp.value + tol)) return false;
    }
    return true;
  });

  {
    const auto [m, n] = ci_cycle_instance();
    check("cycle instance: both modules 1-shift into a rearrangement of the other", [&] {
      // shifting by -1 raises each summand, so containment in the partner
      // witnesses a 1-shift refinement
      return inf_refinement(m.shifted(Rational(-1)), n) &&
             inf_refinement(n.shifted(Rational(-1)), m);
    });
    check("cycle instance: no invertible matrix pair at shift 1", [&] {
      const auto [forward, backward] = interleaving_patterns(m, n, Rational(1));
      return !ci_solvable(forward, backward, Field::f2) &&
             !ci_solvable(forward, backward, Field::f3);
    });
    check("cycle instance: interleaving distance is 3", [&] {
      const auto d = interleaving_distance_bruteforce(m, n, Field::f2);
      return d.finite && d.exact && d.value == 3;
    });
  }

  return results;
}

}  // namespace stairprune
