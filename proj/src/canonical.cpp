#include "grm/canonical.hpp"

#include <algorithm>

namespace grm {

std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<std::size_t> remaining_degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    remaining_degree[v] = t.degree(v);
    if (remaining_degree[v] == 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--remaining_degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, kNone);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for (Vertex w : t.neighbors(v)) {
      if (parent[w] == kNone) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> code(n);
  std::vector<std::string> children;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    children.clear();
    std::size_t length = 2;
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[v] && parent[w] == v) {
        length += code[w].size();
        children.push_back(std::move(code[w]));
      }
    }
    std::sort(children.begin(), children.end());
    std::string& out = code[v];
    out.reserve(length);
    out.push_back('(');
    for (const auto& c : children) out += c;
    out.push_back(')');
  }
  return std::move(code[root]);
}

CanonicalCode canonical_code(const Tree& t) {
  auto c = centers(t);
  std::string best = rooted_code(t, c.front());
  if (c.size() == 2) {
    std::string other = rooted_code(t, c.back());
    if (other < best) best = std::move(other);
  }
  return CanonicalCode{std::move(best)};
}

bool isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace grm

namespace grm {

std::vector<Tree> unique_classes(std::vector<Tree> trees) {
  std::vector<std::pair<CanonicalCode, std::size_t>> keyed;
  keyed.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) keyed.emplace_back(canonical_code(trees[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tree> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(std::move(trees[keyed[i].second]));
  }
  return out;
}

std::vector<CanonicalCode> code_set(const std::vector<Tree>& trees) {
  std::vector<CanonicalCode> codes;
  codes.reserve(trees.size());
  for (const Tree& t : trees) codes.push_back(canonical_code(t));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

}  // namespace grm
