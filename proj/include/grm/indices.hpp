#pragma once

#include <cstddef>
#include <variant>

#include "grm/rational.hpp"
#include "grm/tree.hpp"

namespace grm {

/// Σ over edges uv of (deg u + λ)(deg v + λ). Throws SingletonTree for n = 1.
Rational grm(const Tree& t, const Rational& lambda);

/// M₁ = Σ_v deg(v)².
Rational first_zagreb(const Tree& t);
/// M₂ = Σ_{uv} deg(u)·deg(v).
Rational second_zagreb(const Tree& t);

/// Weight (i+λ)(j+λ) of an edge of type (i,j). At λ = -2 this is
/// 4 - 2(i+j) + ij, which vanishes whenever i or j is 2.
Rational edge_weight(int i, int j, const Rational& lambda);

/// GRM_λ evaluated from a census alone: Σ m_{i,j}(i+λ)(j+λ).
Rational census_grm(const DegreeCensus& c, const Rational& lambda);

struct PathShape {
  std::size_t n = 0;
};
struct StarShape {
  std::size_t n = 0;
};
struct SpiderShape {
  std::size_t n = 0;
  int max_degree = 0;
};
using ClosedFormShape = std::variant<PathShape, StarShape, SpiderShape>;

/// Closed-form GRM_λ of a path, star or spider (one leg longer than one edge).
/// Domains: path n ≥ 3, star n ≥ 2, spider Δ ≥ 3 and n ≥ Δ + 2; anything else
/// raises DomainViolation.
Rational closed_form(const ClosedFormShape& shape, const Rational& lambda);

}  // namespace grm
