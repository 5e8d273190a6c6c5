#include <set>

#include "../oracles.hpp"
#include "grm/canonical.hpp"
#include "grm/enumeration.hpp"
#include "grm/families.hpp"
#include "test_support.hpp"

using namespace grm;

namespace {

EnumSpec spec_of(std::size_t n, std::optional<int> cap = std::nullopt, bool exact = false) {
  EnumSpec s;
  s.n = n;
  s.max_degree = cap;
  s.exact_degree = exact;
  return s;
}

std::set<std::string> codes(const std::vector<Tree>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(canonical_code(t).text);
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("unconstrained counts follow the free-tree sequence") {
    for (std::size_t n = 1; n <= 18; ++n) {
      CHECK_MESSAGE(count_trees(spec_of(n)) == oracle::known_free_tree_count(n), "n = " << n);
    }
  }

  TEST_CASE("small classes") {
    CHECK(enumerate_trees(spec_of(4)).size() == 2);
    CHECK(enumerate_trees(spec_of(7)).size() == 11);
    CHECK(count_trees(spec_of(6, 2)) == 1);
    CHECK(count_trees(spec_of(5, 4, true)) == 1);
    CHECK(count_trees(spec_of(4, 4, true)) == 0);
    CHECK(count_trees(spec_of(1)) == 1);
    CHECK(count_trees(spec_of(2, 1)) == 1);
  }

  TEST_CASE("members of the n = 7, Δ = 3 class") {
    const auto all = codes(enumerate_trees(spec_of(7, 3, true)));
    CHECK(all.count(canonical_code(make_t_opt(1, 2).front()).text) == 1);
    CHECK(all.count(canonical_code(make_spider(7, 3)).text) == 1);
    CHECK(all.count(canonical_code(make_path(7)).text) == 0);
  }

  TEST_CASE("matches the Prüfer oracle with and without degree limits") {
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(codes(enumerate_trees(spec_of(n))) == codes(oracle::prufer_classes(n)));
      for (int cap = 2; cap <= 5 && static_cast<std::size_t>(cap) < n; ++cap) {
        CHECK(codes(enumerate_trees(spec_of(n, cap))) == codes(oracle::prufer_classes(n, cap)));
        CHECK(codes(enumerate_trees(spec_of(n, cap, true))) == codes(oracle::prufer_classes(n, cap, true)));
      }
    }
  }

  TEST_CASE("streaming, counting and materializing agree") {
    for (std::size_t n = 3; n <= 13; ++n) {
      for (int cap : {3, 4}) {
        const auto spec = spec_of(n, cap, true);
        std::uint64_t streamed = 0;
        std::set<std::string> seen;
        for_each_tree(spec, [&](const Tree& t) {
          ++streamed;
          seen.insert(canonical_code(t).text);
          CHECK(max_degree(t) == cap);
          CHECK(t.order() == n);
        });
        CHECK(streamed == count_trees(spec));
        CHECK(seen.size() == streamed);
        const auto listed = enumerate_trees(spec);
        CHECK(listed.size() == streamed);
        const auto listed_codes = code_set(listed);
        CHECK(std::is_sorted(listed_codes.begin(), listed_codes.end()));
      }
    }
  }

  TEST_CASE("exact-degree classes partition the unconstrained class") {
    for (std::size_t n = 3; n <= 14; ++n) {
      std::uint64_t sum = 0;
      for (int d = 2; static_cast<std::size_t>(d) < n; ++d) sum += count_trees(spec_of(n, d, true));
      CHECK(sum == oracle::known_free_tree_count(n));
    }
  }

  TEST_CASE("spec validation") {
    CHECK_GRM_ERROR(count_trees(spec_of(0)), ErrorKind::DomainViolation);
    CHECK_GRM_ERROR(count_trees(spec_of(27)), ErrorKind::LimitExceeded);
    CHECK_GRM_ERROR(count_trees(spec_of(5, 1)), ErrorKind::DomainViolation);
    EnumSpec exact_without_cap;
    exact_without_cap.n = 5;
    exact_without_cap.exact_degree = true;
    CHECK_GRM_ERROR(count_trees(exact_without_cap), ErrorKind::DomainViolation);
    EnumSpec big = spec_of(27, 2);
    big.override_guard = true;
    CHECK(count_trees(big) == 1);
  }
}
