#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grm/tree.hpp"

namespace grm {

/// Replaces edge ab by a-w-b; w gets id n.
Tree subdivide(const Tree& t, Vertex a, Vertex b);

/// Adds `count` leaves adjacent to `at`, with ids n, n+1, ...
Tree attach_pendants(const Tree& t, Vertex at, std::size_t count);

struct Rebuilt {
  Tree tree;
  /// Old id -> new id, or kRemoved.
  std::vector<Vertex> new_id;

  static constexpr Vertex kRemoved = static_cast<Vertex>(-1);
};

/// Deletes `removed` (with their incident edges), then adds `added` (given in
/// old ids). Survivors keep their relative order when relabelled.
Rebuilt remove_vertices(const Tree& t, std::span<const Vertex> removed, const EdgeList& added = {});

}  // namespace grm
