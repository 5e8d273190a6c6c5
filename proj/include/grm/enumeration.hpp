#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "grm/tree.hpp"

namespace grm {

/// Which unlabeled free trees to generate.
struct EnumSpec {
  static constexpr std::size_t kDefaultGuard = 26;

  std::size_t n = 1;
  /// Degree cap; nullopt means unbounded.
  std::optional<int> max_degree;
  /// Require the maximum degree to equal *max_degree exactly.
  bool exact_degree = false;
  /// Allow n beyond kDefaultGuard.
  bool override_guard = false;
};

/// Calls `visit` once per isomorphism class, in a fixed generation order
/// (not sorted). Degree caps are enforced while building, never by
/// post-filtering the unconstrained population.
void for_each_tree(const EnumSpec& spec, const std::function<void(const Tree&)>& visit);

/// All classes, sorted by ascending canonical code.
std::vector<Tree> enumerate_trees(const EnumSpec& spec);

/// Number of classes, without building Tree objects.
std::uint64_t count_trees(const EnumSpec& spec);

}  // namespace grm
