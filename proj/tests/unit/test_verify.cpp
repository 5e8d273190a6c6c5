#include "grm/canonical.hpp"
#include "grm/families.hpp"
#include "grm/indices.hpp"
#include "grm/report.hpp"
#include "grm/verify.hpp"
#include "test_support.hpp"

using namespace grm;

namespace {

std::vector<std::string> code_set_text(const std::vector<Tree>& trees) {
  std::vector<std::string> out;
  for (const auto& c : code_set(trees)) out.push_back(c.text);
  return out;
}

VerifyOptions range(std::size_t lo, std::size_t hi) {
  VerifyOptions o;
  o.n_min = lo;
  o.n_max = hi;
  return o;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("min_profile examples") {
    const MinProfile path = min_profile(7, 2, R(-2));
    CHECK(*path.minimum == R(0));
    REQUIRE(path.argmin_codes.size() == 1);
    CHECK(path.argmin_codes[0] == canonical_code(make_path(7)).text);

    const MinProfile cubic = min_profile(7, 3, R(-2));
    CHECK(*cubic.minimum == R(-4));
    REQUIRE(cubic.argmin_codes.size() == 1);
    CHECK(cubic.argmin_codes[0] == canonical_code(make_t_opt(1, 2).front()).text);

    const MinProfile quartic = min_profile(9, 4, R(-2));
    CHECK(*quartic.minimum == R(-12));
    REQUIRE(quartic.argmin_codes.size() == 1);
    CHECK(quartic.argmin_codes[0] == canonical_code(make_tt_opt(1, 2).front()).text);

    CHECK_FALSE(min_profile(4, 4, R(-2)).minimum.has_value());
    CHECK_GRM_ERROR(min_profile(30, 3, R(-2)), ErrorKind::LimitExceeded);
  }

  TEST_CASE("spider claim cells") {
    VerifyOptions o = range(8, 8);
    o.lambdas = {R(0), R(-1)};
    const auto report = verify(Claim::SpiderMinimum, o);
    const Cell* zero = nullptr;
    const Cell* minus_one = nullptr;
    for (const auto& c : report.cells) {
      if (c.delta == 3 && c.lambda == R(0)) zero = &c;
      if (c.delta == 3 && c.lambda == R(-1)) minus_one = &c;
    }
    REQUIRE(zero);
    REQUIRE(minus_one);
    CHECK(*zero->minimum == closed_form(SpiderShape{8, 3}, R(0)));
    CHECK(zero->argmin_codes == std::vector<std::string>{canonical_code(make_spider(8, 3)).text});
    CHECK(*minus_one->minimum == R(5));
    const auto& argmin = minus_one->argmin_codes;
    CHECK(std::count(argmin.begin(), argmin.end(), canonical_code(make_spider(8, 3)).text) == 1);
    CHECK(std::count(argmin.begin(), argmin.end(), canonical_code(make_broom(8, 3, 3)).text) == 1);
    CHECK(report.all_pass());
  }

  TEST_CASE("base case n = Δ + 2 has a single tree") {
    for (int d = 3; d <= 8; ++d) {
      VerifyOptions o = range(static_cast<std::size_t>(d) + 2, static_cast<std::size_t>(d) + 2);
      o.lambdas = {R(1)};
      for (const auto& c : verify(Claim::SpiderMinimum, o).cells) {
        if (c.delta != d) continue;
        CHECK(c.class_size == 1);
        CHECK(c.verdict == BoundVerdict::Tight);
      }
    }
  }

  TEST_CASE("spider claim rejects lambda below -1") {
    VerifyOptions o = range(6, 6);
    o.lambdas = {R(-2)};
    CHECK_GRM_ERROR(verify(Claim::SpiderMinimum, o), ErrorKind::UnsupportedRegime);
  }

  TEST_CASE("cubic claim cells") {
    const auto report = verify(Claim::CubicMinimum, range(7, 11));
    REQUIRE(report.cells.size() == 5);
    CHECK(report.all_pass());
    CHECK(*report.cells[0].minimum == R(-4));
    CHECK(*report.cells[3].minimum == R(-5));
    const auto& nine = report.cells[2];
    CHECK(nine.comparisons[0].equal());
    CHECK(nine.comparisons[0].expected == nine.argmin_codes);
  }

  TEST_CASE("cubic family misses a minimizer at n = 12") {
    const auto report = verify(Claim::CubicMinimum, range(12, 12));
    const Cell& c = report.cells.front();
    CHECK(c.verdict == BoundVerdict::Tight);
    CHECK(c.comparisons[0].expected_within_actual);
    CHECK_FALSE(c.comparisons[0].actual_within_expected);
    CHECK(c.counterexamples.size() == 1);
    CHECK_FALSE(c.pass);
  }

  TEST_CASE("quartic claim cells") {
    const auto report = verify(Claim::QuarticMinimum, range(9, 12));
    REQUIRE(report.cells.size() == 4);
    CHECK(report.cells[0].pass);
    CHECK(report.cells[1].pass);
    CHECK(report.cells[1].argmin_codes == code_set_text(make_tt_opt(2, 2)));
    CHECK(report.cells[2].pass);
    const Cell& twelve = report.cells[3];
    CHECK(twelve.verdict == BoundVerdict::Violated);
    CHECK(*twelve.minimum == R(-13));
    CHECK_FALSE(twelve.counterexamples.empty());
  }

  TEST_CASE("minimum is non-increasing in unit steps for Δ = 3") {
    const auto report = verify(Claim::CubicMinimum, range(7, 16));
    for (std::size_t i = 1; i < report.cells.size(); ++i) {
      const Rational step = *report.cells[i].minimum - *report.cells[i - 1].minimum;
      CHECK((step == R(0) || step == R(-1)));
    }
  }

  TEST_CASE("reports are deterministic and independent of worker count") {
    VerifyOptions one = range(5, 10);
    one.jobs = 1;
    VerifyOptions many = one;
    many.jobs = 4;
    for (auto format : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Markdown}) {
      const std::string a = render_report(verify(Claim::SpiderMinimum, one), format);
      const std::string b = render_report(verify(Claim::SpiderMinimum, one), format);
      CHECK(a == b);
      const std::string c = render_report(verify(Claim::SpiderMinimum, many), format);
      // Worker count is not part of the rendered config.
      CHECK(a == c);
    }
  }
}
