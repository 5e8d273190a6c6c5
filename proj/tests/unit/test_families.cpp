#include "../oracles.hpp"
#include "grm/canonical.hpp"
#include "grm/census_algebra.hpp"
#include "grm/families.hpp"
#include "grm/indices.hpp"
#include "test_support.hpp"

using namespace grm;

namespace {

bool pairwise_distinct(const std::vector<Tree>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (oracle::brute_isomorphic(ts[i], ts[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("basic shapes") {
    CHECK(max_degree(make_star(5)) == 4);
    const DegreeCensus p7 = census(make_path(7));
    CHECK(p7.edges(1, 2) == 2);
    CHECK(p7.edges(2, 2) == 4);
    CHECK(grm::grm(make_spider(7, 3), R(0)) == R(22));
    CHECK(grm::grm(make_broom(8, 3, 3), R(-1)) == R(5));
    CHECK(isomorphic(make_broom(5, 3, 2), make_spider(5, 3)));
    CHECK(isomorphic(make_broom(8, 3, 2), make_spider(8, 3)));
    CHECK(max_degree(make_broom(12, 5, 4)) == 5);
    CHECK(make_broom(12, 5, 4).order() == 12);
  }

  TEST_CASE("constructor domains") {
    CHECK_GRM_ERROR(make_path(1), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_star(1), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_spider(3, 3), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_spider(8, 2), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_broom(5, 3, 3), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_broom(9, 3, 4), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_t_opt(4, 2), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_t_opt(1, 0), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(make_tt_opt(5, 2), ErrorKind::DomainViolation);
  }

  TEST_CASE("T_opt sizes, orders and values") {
    for (int k = 1; k <= 6; ++k) {
      for (int variant = 1; variant <= 3; ++variant) {
        const auto fam = make_t_opt(variant, k);
        for (const auto& t : fam) {
          CHECK(t.order() == static_cast<std::size_t>(3 * k + variant));
          CHECK(max_degree(t) == 3);
          CHECK(grm::grm(t, R(-2)) == R(-(k + 2)));
        }
        CHECK(pairwise_distinct(fam));
      }
      CHECK(make_t_opt(1, k).size() == 1);
      CHECK(make_t_opt(2, k).size() == static_cast<std::size_t>(k / 2));
    }
    CHECK(make_t_opt(2, 2).size() == 1);
  }

  TEST_CASE("TT_opt sizes, orders and values") {
    for (int k = 1; k <= 5; ++k) {
      for (int variant = 1; variant <= 4; ++variant) {
        const auto fam = make_tt_opt(variant, k);
        for (const auto& t : fam) {
          CHECK(t.order() == static_cast<std::size_t>(4 * k + variant));
          CHECK(max_degree(t) == 4);
          CHECK(grm::grm(t, R(-2)) == R(-(4 * k + 4)));
        }
        CHECK(pairwise_distinct(fam));
      }
      CHECK(make_tt_opt(1, k).size() == 1);
      CHECK(make_tt_opt(2, k).size() == static_cast<std::size_t>(k / 2));
    }
    CHECK(isomorphic(make_tt_opt(1, 1).front(), make_star(5)));
    CHECK(make_tt_opt(2, 1).empty());
    CHECK(make_tt_opt(3, 1).empty());
    CHECK(make_tt_opt(4, 1).size() == 1);
    CHECK(census(make_tt_opt(1, 2).front()).to_string() == "n1=6 n2=1 n4=2 | m14=6 m24=2");
  }

  TEST_CASE("TT4 contains the two joined hubs") {
    const int k = 2;
    bool found = false;
    for (const auto& t : make_tt_opt(4, k)) {
      const DegreeCensus c = census(t);
      if (c.edges(4, 4) == 1) {
        found = true;
        CHECK(c.vertices(1) == 2 * k + 4);
        CHECK(c.vertices(2) == k - 1);
        CHECK(c.vertices(4) == k + 1);
      }
    }
    CHECK(found);
  }

  TEST_CASE("predicted census matches every member") {
    const FamilyKind t_kinds[] = {FamilyKind::T1, FamilyKind::T2, FamilyKind::T3};
    const FamilyKind tt_kinds[] = {FamilyKind::TT1, FamilyKind::TT2, FamilyKind::TT3, FamilyKind::TT4};
    auto check_kind = [](FamilyKind kind, int k) {
      FamilySpec spec{kind, 0, k, 0, 0};
      const auto predicted = predicted_census(spec);
      for (const auto& t : make_family(spec)) {
        const DegreeCensus c = census(t);
        CHECK_MESSAGE(std::find(predicted.begin(), predicted.end(), c) != predicted.end(), c.to_string());
      }
    };
    for (int k = 1; k <= 5; ++k) {
      for (auto kind : t_kinds) check_kind(kind, k);
      for (auto kind : tt_kinds) check_kind(kind, k);
    }
    const auto t2 = predicted_census({FamilyKind::T2, 0, 4, 0, 0}).front();
    CHECK(t2.edges(2, 2) == 1);
    CHECK(t2.edges(2, 3) == 6);
    const auto tt3 = predicted_census({FamilyKind::TT3, 0, 3, 0, 0}).front();
    CHECK(tt3.edges(2, 2) == 2);
    CHECK(tt3.edges(1, 4) == 8);
    for (std::size_t n = 5; n <= 9; ++n) {
      CHECK(predicted_census({FamilyKind::Spider, n, 0, 3, 0}).front() == census(make_spider(n, 3)));
    }
  }

  TEST_CASE("T3 second census appears via the pendant constructions") {
    const int k = 3;
    bool found = false;
    for (const auto& t : make_t_opt(3, k)) {
      const DegreeCensus c = census(t);
      if (c.edges(3, 3) == 1) {
        found = true;
        CHECK(c.vertices(1) == k + 3);
        CHECK(c.edges(1, 3) == k + 3);
      }
    }
    CHECK(found);
  }

  TEST_CASE("kind names round trip") {
    for (auto kind : {FamilyKind::Path, FamilyKind::Star, FamilyKind::Spider, FamilyKind::Broom, FamilyKind::T1,
                      FamilyKind::T2, FamilyKind::T3, FamilyKind::TT1, FamilyKind::TT2, FamilyKind::TT3,
                      FamilyKind::TT4}) {
      CHECK(parse_family_kind(to_string(kind)) == kind);
    }
    CHECK(parse_family_kind("tt1") == FamilyKind::TT1);
    CHECK(parse_family_kind("spider") == FamilyKind::Spider);
    CHECK_FALSE(parse_family_kind("TT5").has_value());
  }
}
