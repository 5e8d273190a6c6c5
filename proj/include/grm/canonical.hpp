#pragma once

#include <compare>
#include <string>
#include <vector>

#include "grm/tree.hpp"

namespace grm {

/// Label-invariant identity of an isomorphism class of free trees.
///
/// The text is the AHU parenthesis string of the tree rooted at its center;
/// for a bicentral tree both rootings are encoded and the lexicographically
/// smaller one is kept. Equal codes iff isomorphic trees, and the string
/// order gives a total order on classes.
struct CanonicalCode {
  std::string text;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// One or two center vertices (ascending), found by repeated leaf stripping.
std::vector<Vertex> centers(const Tree& t);

/// AHU encoding of t rooted at `root`: "(" + sorted child encodings + ")".
std::string rooted_code(const Tree& t, Vertex root);

CanonicalCode canonical_code(const Tree& t);

bool isomorphic(const Tree& a, const Tree& b);

}  // namespace grm

namespace grm {

/// Keeps the first tree seen for each isomorphism class and returns the
/// survivors sorted by ascending canonical code.
std::vector<Tree> unique_classes(std::vector<Tree> trees);

/// Canonical codes of `trees`, sorted and deduplicated.
std::vector<CanonicalCode> code_set(const std::vector<Tree>& trees);

}  // namespace grm
