#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "grm/tree.hpp"

namespace grm {

enum class FamilyKind { Path, Star, Spider, Broom, T1, T2, T3, TT1, TT2, TT3, TT4 };

std::string_view to_string(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view text);

/// Which parameters matter depends on the kind: Path/Star use n, Spider uses
/// n and delta, Broom uses n, delta and delta2, the T/TT kinds use k.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::size_t n = 0;
  int k = 0;
  int delta = 0;
  int delta2 = 0;
};

// Labelling convention for every constructor: the spine (or long leg) is
// numbered first, pendants follow in spine order, and vertices introduced by
// a later subdivision or attachment take the next free ids.

Tree make_path(std::size_t n);
Tree make_star(std::size_t n);
/// Centre 0, long leg 1..n-Δ, then Δ-1 single-edge legs. Needs Δ ≥ 3, n ≥ Δ+1.
Tree make_spider(std::size_t n, int delta);
/// Spine P_{n-Δ-Δ'+2} with Δ-1 leaves on its first vertex and Δ'-1 on its
/// last. Needs Δ ≥ Δ' ≥ 2 and n ≥ Δ + Δ'.
Tree make_broom(std::size_t n, int delta, int delta2);

/// Extremal trees for Δ = 3 at λ = -2, orders 3k+1, 3k+2, 3k+3 for variants
/// 1, 2, 3. Each result is deduplicated by isomorphism and sorted by
/// canonical code; variants whose construction has no admissible site for
/// this k return an empty vector.
std::vector<Tree> make_t_opt(int variant, int k);

/// Extremal trees for Δ = 4 at λ = -2, orders 4k+1 .. 4k+4 for variants 1..4.
std::vector<Tree> make_tt_opt(int variant, int k);

std::vector<Tree> make_family(const FamilySpec& spec);

/// Degree censuses stated for members of the family. Multi-case families
/// (T3, TT4) yield one census per case.
std::vector<DegreeCensus> predicted_census(const FamilySpec& spec);

/// Order of every member of a T/TT family with parameter k.
std::size_t family_order(FamilyKind kind, int k);

}  // namespace grm
