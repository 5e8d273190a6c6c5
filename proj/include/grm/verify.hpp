#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grm/rational.hpp"
#include "grm/tree.hpp"

namespace grm {

/// The claims the harness can check. CLI ids: "2.1", "3.2", "3.3", "sec4".
enum class Claim {
  SpiderMinimum,   // λ ≥ -1: spider closed form is the minimum, with brooms at λ = -1
  CubicMinimum,    // λ = -2, Δ = 3: minimum and the T_opt families
  CubicCensus,     // λ = -2, Δ = 3: census algebra agrees with enumeration
  QuarticMinimum,  // λ = -2, Δ = 4: minimum and the TT_opt families
};

std::string_view claim_id(Claim c) noexcept;
std::optional<Claim> parse_claim(std::string_view id);

/// Minimum of GRM_λ over one enumerated class, with all minimizers.
struct MinProfile {
  Rational lambda;
  std::optional<Rational> minimum;  // empty iff the class is empty
  std::vector<Tree> argmin;         // one representative per class, sorted by code
  std::vector<std::string> argmin_codes;
};

/// Enumerates trees of order n with max degree exactly Δ (or at most Δ) once
/// and profiles every requested λ.
struct ClassProfile {
  std::uint64_t class_size = 0;
  std::vector<MinProfile> per_lambda;
};
ClassProfile profile_class(std::size_t n, int delta, bool exact_degree, const std::vector<Rational>& lambdas);

/// Single-λ convenience over profile_class; LimitExceeded past the enumerator guard.
MinProfile min_profile(std::size_t n, int delta, const Rational& lambda, bool exact_degree = true);

enum class BoundVerdict { Tight, Holds, Violated, EmptyClass, NoBound };
std::string_view to_string(BoundVerdict v) noexcept;

/// An expected set against the set actually found, both as sorted strings.
struct SetComparison {
  std::string label;
  std::vector<std::string> expected;
  std::vector<std::string> actual;
  bool actual_within_expected = false;
  bool expected_within_actual = false;

  bool equal() const { return actual_within_expected && expected_within_actual; }
};
SetComparison compare_sets(std::string label, std::vector<std::string> expected, std::vector<std::string> actual);

struct Cell {
  std::size_t n = 0;
  int delta = 0;
  Rational lambda;
  std::uint64_t class_size = 0;
  std::optional<Rational> minimum;
  std::optional<Rational> bound;
  BoundVerdict verdict = BoundVerdict::NoBound;
  std::vector<std::string> argmin_codes;
  /// The first comparison is the primary family check.
  std::vector<SetComparison> comparisons;
  /// Edge lists of minimizers outside the expected family, or of a tree
  /// beating the bound.
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
  bool pass = false;
  std::optional<double> wall_ms;
};

struct VerifyOptions {
  std::size_t n_min = 0;  // 0 picks the claim's default range
  std::size_t n_max = 0;
  std::vector<Rational> lambdas;  // empty picks the claim's default set
  bool exact_degree = true;
  unsigned jobs = 1;
  bool timings = false;
};

struct VerificationReport {
  Claim claim = Claim::SpiderMinimum;
  VerifyOptions options;  // after defaults were filled in
  std::vector<Cell> cells;

  bool all_pass() const;
  std::size_t failures() const;
};

/// Default ranges: spider 5..14 with λ ∈ {-1, -1/2, 0, 1, 2} and 3 ≤ Δ ≤ n-2;
/// cubic 7..16; quartic 5..13.
VerificationReport verify(Claim claim, const VerifyOptions& options);

/// Expected minimizers for the λ = -1 spider claim: SP(n,Δ) plus brooms
/// BR(n,Δ,Δ') for 2 ≤ Δ' ≤ Δ with n ≥ Δ + Δ' + slack.
std::vector<Tree> spider_broom_set(std::size_t n, int delta, int slack);

}  // namespace grm
