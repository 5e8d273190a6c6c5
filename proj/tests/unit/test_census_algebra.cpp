#include "grm/census_algebra.hpp"
#include "grm/enumeration.hpp"
#include "grm/families.hpp"
#include "grm/indices.hpp"
#include "test_support.hpp"

using namespace grm;

TEST_SUITE("census-algebra") {
  TEST_CASE("Δ ≤ 3 solutions") {
    const CensusSolution t1 = solve_census_d3({7, 2, 0, 2});
    REQUIRE(t1.realizable);
    CHECK(t1.value("m13") == R(4));
    CHECK(t1.value("m33") == R(0));
    CHECK(t1.value("n1") == R(4));
    CHECK(*t1.census == census(make_t_opt(1, 2).front()));

    const CensusSolution p7 = solve_census_d3({7, 0, 4, 0});
    REQUIRE(p7.realizable);
    CHECK(p7.value("n1") == R(2));
    CHECK(p7.value("m13") == R(0));
    CHECK(p7.value("m12") == R(2));
    CHECK(*p7.census == census(make_path(7)));

    const CensusSolution bad = solve_census_d3({7, 0, 0, 2});
    CHECK_FALSE(bad.realizable);
    CHECK_FALSE(bad.census.has_value());
  }

  TEST_CASE("Δ ≤ 4 solutions") {
    const CensusSolution tt1 = solve_census_d4({9, 0, 0, 0, 0, 0, 0, 0});
    REQUIRE(tt1.realizable);
    CHECK(tt1.value("n1") == R(6));
    CHECK(tt1.value("n2") == R(1));
    CHECK(tt1.value("n4") == R(2));
    CHECK(tt1.value("m14") == R(6));
    CHECK(tt1.value("m24") == R(2));
    CHECK(tt1.value("m33") == R(0));

    const CensusSolution fractional = solve_census_d4({9, 0, 2, 0, 0, 0, 0, 0});
    CHECK_FALSE(fractional.value("n2").is_integer());
    CHECK_FALSE(fractional.realizable);
  }

  TEST_CASE("hard-coded forms agree with exact elimination") {
    const EliminationCheck d3 = cross_check_d3();
    const EliminationCheck d4 = cross_check_d4();
    CHECK(d3.agrees);
    CHECK(d4.agrees);
    CHECK(d3.mismatches.empty());
    CHECK(d4.mismatches.empty());
  }

  TEST_CASE("round trip through the free variables") {
    EnumSpec spec;
    for (std::size_t n = 3; n <= 12; ++n) {
      spec.n = n;
      spec.max_degree = 4;
      for_each_tree(spec, [&](const Tree& t) {
        const DegreeCensus c = census(t);
        const CensusSolution s4 = solve_census_d4(free_vars_d4(c));
        REQUIRE(s4.realizable);
        CHECK(*s4.census == c);
        CHECK(grm2_census_d4(c) == grm::grm(t, R(-2)));
        if (c.max_degree() <= 3) {
          const CensusSolution s3 = solve_census_d3(free_vars_d3(c));
          REQUIRE(s3.realizable);
          CHECK(*s3.census == c);
          CHECK(grm2_census_d3(c) == grm::grm(t, R(-2)));
        }
      });
    }
  }

  TEST_CASE("census shortcuts reject large degrees") {
    const DegreeCensus star = census(make_star(6));
    CHECK_GRM_ERROR(grm2_census_d3(star), ErrorKind::DegreeBoundViolated);
    CHECK_GRM_ERROR(grm2_census_d4(star), ErrorKind::DegreeBoundViolated);
    CHECK_GRM_ERROR(free_vars_d3(census(make_star(5))), ErrorKind::DegreeBoundViolated);
    DegreeCensus flat;
    flat.set_vertices(2, 4);
    flat.set_edges(2, 2, 4);
    CHECK(grm2_census_d3(flat) == R(0));
    for (int k = 1; k <= 5; ++k) {
      CHECK(grm2_census_d3(census(make_t_opt(1, k).front())) == R(-(k + 2)));
      CHECK(grm2_census_d4(census(make_tt_opt(1, k).front())) == R(-(4 * k + 4)));
    }
  }

  TEST_CASE("theorem bounds") {
    CHECK(theorem_bound(3, 10, R(-2)) == R(-5));
    CHECK(theorem_bound(4, 9, R(-2)) == R(-12));
    CHECK(theorem_bound(3, 8, R(-1)) == R(5));
    CHECK(theorem_bound(4, 10, R(-2)) == R(-12));
    CHECK(theorem_bound(4, 11, R(-2)) == R(-12));
    CHECK(theorem_bound(4, 12, R(-2)) == R(-12));
    const std::int64_t cubic[] = {-4, -4, -4, -5, -5, -5, -6, -6, -6, -7};
    for (std::size_t n = 7; n <= 16; ++n) CHECK(theorem_bound(3, n, R(-2)) == R(cubic[n - 7]));
    CHECK_GRM_ERROR(theorem_bound(5, 12, R(-2)), ErrorKind::UnsupportedRegime);
    CHECK_GRM_ERROR(theorem_bound(3, 6, R(-2)), ErrorKind::UnsupportedRegime);
    CHECK_GRM_ERROR(theorem_bound(3, 10, R(-3, 2)), ErrorKind::UnsupportedRegime);
    CHECK_GRM_ERROR(theorem_bound(6, 7, R(0)), ErrorKind::UnsupportedRegime);
  }

  TEST_CASE("optimal census catalog") {
    for (int k = 2; k <= 5; ++k) {
      const auto one = optimal_census_catalog(3, static_cast<std::size_t>(3 * k + 1));
      REQUIRE(one.size() == 1);
      CHECK(one[0].edges(2, 2) == 0);
      CHECK(one[0].edges(1, 3) == k + 2);
      CHECK(one[0].edges(2, 3) == 2 * k - 2);
      CHECK(optimal_census_catalog(3, static_cast<std::size_t>(3 * k + 3)).size() == 2);
      const auto three = optimal_census_catalog(4, static_cast<std::size_t>(4 * k + 3));
      REQUIRE(three.size() == 1);
      CHECK(three[0].edges(2, 2) == 2);
      const auto four = optimal_census_catalog(4, static_cast<std::size_t>(4 * k + 4));
      REQUIRE(four.size() == 2);
      CHECK(((four[0].edges(2, 2) == 3 && four[1].edges(4, 4) == 1) ||
             (four[1].edges(2, 2) == 3 && four[0].edges(4, 4) == 1)));
    }
    for (std::size_t n = 7; n <= 16; ++n) {
      for (const auto& c : optimal_census_catalog(3, n)) {
        CHECK(c.satisfies_invariants());
        CHECK(c.order() == static_cast<std::int64_t>(n));
        CHECK(census_grm(c, R(-2)) == theorem_bound(3, n, R(-2)));
      }
    }
    CHECK_GRM_ERROR(optimal_census_catalog(5, 10), ErrorKind::UnsupportedRegime);
  }

  TEST_CASE("free-variable sweep reproduces the cubic bound without enumeration") {
    for (std::size_t n = 7; n <= 16; ++n) {
      const SweepResult s = census_sweep_minimum(3, n);
      CHECK(s.minimum == theorem_bound(3, n, R(-2)));
      const auto catalog = optimal_census_catalog(3, n);
      CHECK(s.minimizers == catalog);
    }
  }

  TEST_CASE("quartic sweep finds integer-feasible censuses below the stated bound") {
    // n = 12: the census system admits -14, and an actual tree reaches -13.
    CHECK(census_sweep_minimum(4, 12).minimum == R(-14));
    CHECK(census_sweep_minimum(4, 9).minimum == R(-12));
    CHECK(census_sweep_minimum(4, 13).minimum == R(-16));
  }
}
