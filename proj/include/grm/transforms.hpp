#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "grm/rational.hpp"
#include "grm/tree.hpp"

namespace grm {

/// GRM_λ(T) - GRM_λ(T - leaf) from the local leaf-removal recurrence:
/// (λ+1)(λ+deg w) + Σ_{w' ~ w, w' ≠ leaf} (λ + deg w'), where w is the
/// leaf's neighbour. Throws NotALeaf, or DomainViolation when n < 3.
Rational pendant_removal_delta(const Tree& t, Vertex leaf, const Rational& lambda);

/// T - leaf, survivors relabelled in id order.
Tree remove_leaf(const Tree& t, Vertex leaf);

/// The four reductions used to shrink a tree with Δ ≤ 3 while tracking
/// GRM_{-2}. Labels in traces are "T1".."T4" in this order.
enum class Rewrite {
  /// Contract a (2,2) edge. Removes one vertex; GRM_{-2} unchanged.
  ContractTwoTwo,
  /// Drop a leaf hanging from a degree-2 vertex whose other neighbour has
  /// degree 3. Removes one vertex; GRM_{-2}(T) = GRM_{-2}(T') + 1.
  PruneLeafBeforeThree,
  /// At the end u-v-w of a longest path with deg v = deg w = 3, drop both
  /// leaves of v. Removes two vertices; GRM_{-2} unchanged.
  TrimCherryAtThree,
  /// At the end u-v-w-t of a longest path with deg v = 3, deg w = 2,
  /// deg t = 3, drop v, its other leaf and w, then hang u from t. Removes
  /// three vertices; GRM_{-2}(T) = GRM_{-2}(T') - 1.
  SpliceCherryPastTwo,
};

std::string_view label(Rewrite r) noexcept;

struct TransformOutcome {
  Rewrite rewrite = Rewrite::ContractTwoTwo;
  Tree result;
  /// Ids in the input tree that no longer exist in `result`.
  std::vector<Vertex> removed;
  /// GRM_{-2}(T) - GRM_{-2}(T') as asserted by the rewrite's rule.
  Rational claimed_delta;
};

// Each returns nullopt when the trigger configuration is absent. They require
// Δ ≤ 3 (DegreeBoundViolated) and n ≥ 7 (DomainViolation). Sites are chosen
// deterministically: smallest qualifying vertex ids, and for the longest-path
// rewrites the smallest-id diameter endpoint whose configuration matches.
std::optional<TransformOutcome> contract_two_two(const Tree& t);
std::optional<TransformOutcome> prune_leaf_before_three(const Tree& t);
std::optional<TransformOutcome> trim_cherry_at_three(const Tree& t);
std::optional<TransformOutcome> splice_cherry_past_two(const Tree& t);

std::optional<TransformOutcome> apply(Rewrite r, const Tree& t);

/// Every site where the rewrite applies, in the same order the single-site
/// functions search; the first element is what apply() returns.
std::vector<TransformOutcome> all_instances(Rewrite r, const Tree& t);

struct NormalizeResult {
  Tree final_tree;
  std::vector<TransformOutcome> trace;
  /// Sum of claimed deltas along the trace.
  Rational total_claimed_delta;
};

/// Applies the first applicable rewrite (in enum order) until n < 7 or none
/// applies.
NormalizeResult normalize(const Tree& t);

}  // namespace grm
