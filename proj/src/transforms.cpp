#include "grm/transforms.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "grm/error.hpp"
#include "grm/tree_edit.hpp"

namespace grm {
namespace {

constexpr std::size_t kMinOrder = 7;

void check_domain(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) > 3) {
      throw Error(ErrorKind::DegreeBoundViolated, "rewrites are defined for max degree <= 3 only");
    }
  }
  if (t.order() < kMinOrder) {
    throw Error(ErrorKind::DomainViolation, "rewrites need n >= 7, got " + std::to_string(t.order()));
  }
}

std::vector<std::size_t> distances_from(const Tree& t, Vertex source, std::vector<Vertex>* parent = nullptr) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(t.order(), kUnset);
  if (parent) parent->assign(t.order(), source);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    for (Vertex w : t.neighbors(v)) {
      if (dist[w] == kUnset) {
        dist[w] = dist[v] + 1;
        if (parent) (*parent)[w] = v;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Prefixes of length `len` of every longest path, read from a diameter
/// endpoint u. Ordered by ascending u, then ascending far end; duplicates
/// (several far ends behind the same prefix) are dropped.
std::vector<std::vector<Vertex>> longest_path_prefixes(const Tree& t, std::size_t len) {
  const auto n = t.order();
  std::vector<std::size_t> eccentricity(n);
  std::size_t diameter = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto d = distances_from(t, v);
    eccentricity[v] = *std::max_element(d.begin(), d.end());
    diameter = std::max(diameter, eccentricity[v]);
  }
  std::vector<std::vector<Vertex>> prefixes;
  if (diameter + 1 < len) return prefixes;
  for (Vertex u = 0; u < n; ++u) {
    if (eccentricity[u] != diameter) continue;
    std::vector<Vertex> parent;
    auto d = distances_from(t, u, &parent);
    for (Vertex far = 0; far < n; ++far) {
      if (d[far] != diameter) continue;
      std::vector<Vertex> path;
      for (Vertex x = far;; x = parent[x]) {
        path.push_back(x);
        if (x == u) break;
      }
      std::reverse(path.begin(), path.end());
      path.resize(len);
      if (std::find(prefixes.begin(), prefixes.end(), path) == prefixes.end()) prefixes.push_back(std::move(path));
    }
  }
  return prefixes;
}

/// Leaf neighbour of v other than `not_this`, smallest id.
std::optional<Vertex> other_leaf(const Tree& t, Vertex v, Vertex not_this) {
  for (Vertex x : t.neighbors(v)) {
    if (x != not_this && t.degree(x) == 1) return x;
  }
  return std::nullopt;
}

TransformOutcome make_outcome(Rewrite r, const Tree& t, std::vector<Vertex> removed, const EdgeList& added,
                              std::int64_t claimed) {
  std::sort(removed.begin(), removed.end());
  auto rebuilt = remove_vertices(t, removed, added);
  return TransformOutcome{r, std::move(rebuilt.tree), std::move(removed), Rational(claimed)};
}

}  // namespace

Rational pendant_removal_delta(const Tree& t, Vertex leaf, const Rational& lambda) {
  if (t.order() < 3) throw Error(ErrorKind::DomainViolation, "leaf removal needs n >= 3");
  if (t.degree(leaf) != 1) throw Error(ErrorKind::NotALeaf, "vertex " + std::to_string(leaf) + " is not a leaf");
  const Vertex w = t.neighbors(leaf)[0];
  const Rational deg_w(static_cast<std::int64_t>(t.degree(w)));
  Rational delta = (lambda + Rational(1)) * (lambda + deg_w);
  for (Vertex x : t.neighbors(w)) {
    if (x != leaf) delta += lambda + Rational(static_cast<std::int64_t>(t.degree(x)));
  }
  return delta;
}

Tree remove_leaf(const Tree& t, Vertex leaf) {
  if (t.degree(leaf) != 1) throw Error(ErrorKind::NotALeaf, "vertex " + std::to_string(leaf) + " is not a leaf");
  const Vertex removed[] = {leaf};
  return remove_vertices(t, removed).tree;
}

std::string_view label(Rewrite r) noexcept {
  switch (r) {
    case Rewrite::ContractTwoTwo: return "T1";
    case Rewrite::PruneLeafBeforeThree: return "T2";
    case Rewrite::TrimCherryAtThree: return "T3";
    case Rewrite::SpliceCherryPastTwo: return "T4";
  }
  return "?";
}

namespace {

std::vector<TransformOutcome> contract_sites(const Tree& t) {
  std::vector<TransformOutcome> out;
  for (const Edge& e : t.edges()) {
    if (t.degree(e.u) != 2 || t.degree(e.v) != 2) continue;
    // Drop v and join u to v's other neighbour.
    const Vertex beyond = t.neighbors(e.v)[0] == e.u ? t.neighbors(e.v)[1] : t.neighbors(e.v)[0];
    out.push_back(make_outcome(Rewrite::ContractTwoTwo, t, {e.v}, {{e.u, beyond}}, 0));
  }
  return out;
}

std::vector<TransformOutcome> prune_sites(const Tree& t) {
  std::vector<TransformOutcome> out;
  for (Vertex leaf = 0; leaf < t.order(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    const Vertex u = t.neighbors(leaf)[0];
    if (t.degree(u) != 2) continue;
    const Vertex w = t.neighbors(u)[0] == leaf ? t.neighbors(u)[1] : t.neighbors(u)[0];
    if (t.degree(w) == 1) {
      // u-leaf-w would be the whole tree, impossible once n >= 7.
      throw Error(ErrorKind::DomainViolation, "leaf-degree-two-leaf configuration reached with n >= 7");
    }
    if (t.degree(w) != 3) continue;
    out.push_back(make_outcome(Rewrite::PruneLeafBeforeThree, t, {leaf}, {}, 1));
  }
  return out;
}

std::vector<TransformOutcome> trim_sites(const Tree& t) {
  std::vector<TransformOutcome> out;
  for (const auto& p : longest_path_prefixes(t, 3)) {
    const Vertex u = p[0], v = p[1], w = p[2];
    if (t.degree(v) != 3 || t.degree(w) != 3) continue;
    auto u2 = other_leaf(t, v, u);
    if (!u2) continue;
    out.push_back(make_outcome(Rewrite::TrimCherryAtThree, t, {u, *u2}, {}, 0));
  }
  return out;
}

std::vector<TransformOutcome> splice_sites(const Tree& t) {
  std::vector<TransformOutcome> out;
  for (const auto& p : longest_path_prefixes(t, 4)) {
    const Vertex u = p[0], v = p[1], w = p[2], x = p[3];
    if (t.degree(v) != 3 || t.degree(w) != 2 || t.degree(x) != 3) continue;
    auto u2 = other_leaf(t, v, u);
    if (!u2) continue;
    out.push_back(make_outcome(Rewrite::SpliceCherryPastTwo, t, {v, *u2, w}, {{u, x}}, -1));
  }
  return out;
}

std::optional<TransformOutcome> first(std::vector<TransformOutcome> sites) {
  if (sites.empty()) return std::nullopt;
  return std::move(sites.front());
}

}  // namespace

std::optional<TransformOutcome> contract_two_two(const Tree& t) { return first(all_instances(Rewrite::ContractTwoTwo, t)); }

std::optional<TransformOutcome> prune_leaf_before_three(const Tree& t) {
  return first(all_instances(Rewrite::PruneLeafBeforeThree, t));
}

std::optional<TransformOutcome> trim_cherry_at_three(const Tree& t) {
  return first(all_instances(Rewrite::TrimCherryAtThree, t));
}

std::optional<TransformOutcome> splice_cherry_past_two(const Tree& t) {
  return first(all_instances(Rewrite::SpliceCherryPastTwo, t));
}

std::vector<TransformOutcome> all_instances(Rewrite r, const Tree& t) {
  check_domain(t);
  switch (r) {
    case Rewrite::ContractTwoTwo: return contract_sites(t);
    case Rewrite::PruneLeafBeforeThree: return prune_sites(t);
    case Rewrite::TrimCherryAtThree: return trim_sites(t);
    case Rewrite::SpliceCherryPastTwo: return splice_sites(t);
  }
  return {};
}

std::optional<TransformOutcome> apply(Rewrite r, const Tree& t) {
  switch (r) {
    case Rewrite::ContractTwoTwo: return contract_two_two(t);
    case Rewrite::PruneLeafBeforeThree: return prune_leaf_before_three(t);
    case Rewrite::TrimCherryAtThree: return trim_cherry_at_three(t);
    case Rewrite::SpliceCherryPastTwo: return splice_cherry_past_two(t);
  }
  return std::nullopt;
}

NormalizeResult normalize(const Tree& t) {
  check_domain(t);
  NormalizeResult result{t, {}, Rational(0)};
  while (result.final_tree.order() >= kMinOrder) {
    std::optional<TransformOutcome> step;
    for (Rewrite r : {Rewrite::ContractTwoTwo, Rewrite::PruneLeafBeforeThree, Rewrite::TrimCherryAtThree,
                      Rewrite::SpliceCherryPastTwo}) {
      step = apply(r, result.final_tree);
      if (step) break;
    }
    if (!step) break;
    result.total_claimed_delta += step->claimed_delta;
    result.final_tree = step->result;
    result.trace.push_back(std::move(*step));
  }
  return result;
}

}  // namespace grm
