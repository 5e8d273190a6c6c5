#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace grm {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Unlabeled-in-spirit, labeled-in-storage finite tree.
///
/// Vertex ids are exactly 0..n-1 and every adjacency list is sorted, so two
/// traversals of the same Tree always visit vertices in the same order.
/// Instances are immutable once constructed.
class Tree {
 public:
  /// Validates the adjacency structure: symmetric, irreflexive, no repeated
  /// neighbours, n-1 edges, connected. Throws grm::Error naming the first
  /// violated invariant.
  explicit Tree(std::vector<std::vector<Vertex>> adjacency);

  static Tree single_vertex();

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return adj_.size() - 1; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  /// Each edge once as (u, v) with u < v, lexicographically sorted.
  EdgeList edges() const;

  /// Labeled equality (same ids, same adjacency); use isomorphic() for the
  /// unlabeled notion.
  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// Builds a tree from arbitrary non-negative ids. Ids are compacted to
/// 0..n-1 in order of first appearance in the list.
Tree build_tree(const EdgeList& edges);

/// Counts n_i (vertices of degree i) and m_{i,j} (edges joining degrees i and
/// j, unordered). Zero entries are never stored, so equality and ordering are
/// semantic regardless of how the census was produced.
class DegreeCensus {
 public:
  std::int64_t vertices(int degree) const;
  std::int64_t edges(int i, int j) const;

  void set_vertices(int degree, std::int64_t count);
  void set_edges(int i, int j, std::int64_t count);
  void add_vertex(int degree, std::int64_t count = 1);
  void add_edge(int i, int j, std::int64_t count = 1);

  /// Σ n_i.
  std::int64_t order() const;
  /// Largest i with n_i > 0, or 0 for an empty census.
  int max_degree() const;

  /// Vertex sum, degree sum 2(n-1), per-degree handshake and non-negativity.
  bool satisfies_invariants() const;

  const std::map<int, std::int64_t>& vertex_counts() const noexcept { return n_; }
  const std::map<std::pair<int, int>, std::int64_t>& edge_counts() const noexcept { return m_; }

  /// Compact one-line rendering, e.g. "n1=4 n2=1 n3=2 | m13=4 m23=2".
  std::string to_string() const;

  friend bool operator==(const DegreeCensus&, const DegreeCensus&) = default;
  friend auto operator<=>(const DegreeCensus&, const DegreeCensus&) = default;

 private:
  std::map<int, std::int64_t> n_;
  std::map<std::pair<int, int>, std::int64_t> m_;
};

DegreeCensus census(const Tree& t);

/// Maximum vertex degree; throws SingletonTree for n = 1.
int max_degree(const Tree& t);

/// Reads the "u v" per line edge-list format ('#' comments, blank lines ok).
EdgeList parse_edge_list(std::istream& in);
EdgeList parse_edge_list_file(const std::string& path);
std::string format_edge_list(const Tree& t);

}  // namespace grm
