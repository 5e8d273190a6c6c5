#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grm/rational.hpp"
#include "grm/tree.hpp"

namespace grm {

// The census systems have no (1,1) edge type, so they describe trees with
// n ≥ 3 only.

/// Free variables of the linear census system for trees with Δ ≤ 3.
struct FreeCensusVarsD3 {
  std::int64_t n = 0;
  std::int64_t n3 = 0;
  std::int64_t m22 = 0;
  std::int64_t m23 = 0;
};

/// Free variables of the linear census system for trees with Δ ≤ 4.
struct FreeCensusVarsD4 {
  std::int64_t n = 0;
  std::int64_t n3 = 0;
  std::int64_t m12 = 0;
  std::int64_t m13 = 0;
  std::int64_t m22 = 0;
  std::int64_t m23 = 0;
  std::int64_t m34 = 0;
  std::int64_t m44 = 0;
};

struct CensusSolution {
  /// Dependent variables in a fixed order, e.g. {"n1", 4}, {"n2", 1}, ...
  std::vector<std::pair<std::string, Rational>> derived;
  /// All free and derived counts are non-negative integers.
  bool realizable = false;
  /// Full census, present iff realizable.
  std::optional<DegreeCensus> census;

  Rational value(const std::string& name) const;
};

/// n1, n2, m33, m13, m12 from (n, n3, m22, m23).
CensusSolution solve_census_d3(const FreeCensusVarsD3& v);
/// n1, n2, n4, m14, m24, m33 from (n, n3, m12, m13, m22, m23, m34, m44).
CensusSolution solve_census_d4(const FreeCensusVarsD4& v);

/// Reads the free variables off a census; DegreeBoundViolated if Δ is too large.
FreeCensusVarsD3 free_vars_d3(const DegreeCensus& c);
FreeCensusVarsD4 free_vars_d4(const DegreeCensus& c);

/// GRM_{-2} = m33 - m13 for Δ ≤ 3.
Rational grm2_census_d3(const DegreeCensus& c);
/// GRM_{-2} = 3m12 + m13 + m22 + m34 + 3m44 - n + n3 - 3 for Δ ≤ 4.
Rational grm2_census_d4(const DegreeCensus& c);

/// Lower bound on GRM_λ over trees of order n with maximum degree Δ.
///   λ = -2, Δ = 3, n ≥ 7:  -(⌊(n-1)/3⌋ + 2)
///   λ = -2, Δ = 4, n ≥ 5:  -(n+3), -(n+2), -(n+1), -n for n ≡ 1, 2, 3, 0 (mod 4)
///   λ ≥ -1, 3 ≤ Δ ≤ n-2:   spider closed form
/// Anything else raises UnsupportedRegime.
Rational theorem_bound(int delta, std::size_t n, const Rational& lambda);

/// Censuses of trees attaining the λ = -2 bound, as derived from the census
/// systems. Δ = 3: one census for n ≡ 1, 2 (mod 3), two for n ≡ 0. Δ = 4: one
/// for n ≡ 1, 2, 3 (mod 4), two for n ≡ 0. Being derived from the linear
/// system alone, an entry need not be realizable by a tree for tiny n.
std::vector<DegreeCensus> optimal_census_catalog(int delta, std::size_t n);

struct EliminationCheck {
  bool agrees = true;
  std::vector<std::string> mismatches;
};

/// Solves the raw census systems by exact Gauss-Jordan elimination and
/// compares the resulting affine maps with the hard-coded solutions.
EliminationCheck cross_check_d3();
EliminationCheck cross_check_d4();

struct SweepResult {
  Rational minimum;
  /// Every integer-feasible census attaining the minimum, sorted.
  std::vector<DegreeCensus> minimizers;
};

/// Minimum of GRM_{-2} over all realizable censuses of order n with maximum
/// degree exactly Δ ∈ {3, 4}, found by sweeping the free variables. Uses no
/// tree enumeration.
SweepResult census_sweep_minimum(int delta, std::size_t n);

}  // namespace grm
