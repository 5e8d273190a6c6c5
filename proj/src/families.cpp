#include "grm/families.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "grm/canonical.hpp"
#include "grm/error.hpp"
#include "grm/tree_edit.hpp"

namespace grm {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::DomainViolation, message);
}

void require_k(int k) { require(k >= 1, "family parameter k must be >= 1, got " + std::to_string(k)); }

/// Path v_1..v_{2k+1} (ids 0..2k) with `per_site` leaves on every v_i, i even.
Tree spine_with_even_pendants(int k, std::size_t per_site) {
  require_k(k);
  const std::size_t spine = 2 * static_cast<std::size_t>(k) + 1;
  std::vector<std::vector<Vertex>> adj(spine);
  for (Vertex i = 0; i + 1 < spine; ++i) {
    adj[i].push_back(i + 1);
    adj[i + 1].push_back(i);
  }
  for (Vertex i = 1; i < spine; i += 2) {
    for (std::size_t p = 0; p < per_site; ++p) {
      const auto leaf = static_cast<Vertex>(adj.size());
      adj[i].push_back(leaf);
      adj.push_back({i});
    }
  }
  return Tree(std::move(adj));
}

/// Subdivide v_i v_{i+1} for odd 3 ≤ i ≤ 2k-1 (ids i-1, i).
std::vector<Tree> subdivide_odd_spine_edges(const Tree& base, int k) {
  std::vector<Tree> out;
  for (int i = 3; i <= 2 * k - 1; i += 2) {
    out.push_back(subdivide(base, static_cast<Vertex>(i - 1), static_cast<Vertex>(i)));
  }
  return unique_classes(std::move(out));
}

/// Subdivide every edge xy with deg(x) ≥ 2 and deg(y) = 2, in any member.
std::vector<Tree> subdivide_next_to_degree_two(const std::vector<Tree>& members) {
  std::vector<Tree> out;
  for (const Tree& t : members) {
    for (const Edge& e : t.edges()) {
      const auto du = t.degree(e.u);
      const auto dv = t.degree(e.v);
      if ((du >= 2 && dv == 2) || (dv >= 2 && du == 2)) out.push_back(subdivide(t, e.u, e.v));
    }
  }
  return out;
}

/// Attach `count` leaves to either endpoint of every (2,2) edge.
std::vector<Tree> attach_at_two_two_edges(const std::vector<Tree>& members, std::size_t count) {
  std::vector<Tree> out;
  for (const Tree& t : members) {
    for (const Edge& e : t.edges()) {
      if (t.degree(e.u) == 2 && t.degree(e.v) == 2) {
        out.push_back(attach_pendants(t, e.u, count));
        out.push_back(attach_pendants(t, e.v, count));
      }
    }
  }
  return out;
}

template <typename... Lists>
std::vector<Tree> merged(Lists&&... lists) {
  std::vector<Tree> all;
  (all.insert(all.end(), lists.begin(), lists.end()), ...);
  return unique_classes(std::move(all));
}

DegreeCensus make_census(std::initializer_list<std::pair<int, std::int64_t>> vertices,
                         std::initializer_list<std::pair<std::pair<int, int>, std::int64_t>> edges) {
  DegreeCensus c;
  for (const auto& [d, count] : vertices) c.add_vertex(d, count);
  for (const auto& [key, count] : edges) c.add_edge(key.first, key.second, count);
  return c;
}

DegreeCensus spider_census(std::size_t n, int delta) {
  const auto leg = static_cast<std::int64_t>(n) - delta;
  if (leg <= 1) return make_census({{1, delta}, {delta, 1}}, {{{1, delta}, delta}});
  return make_census({{1, delta}, {2, leg - 1}, {delta, 1}},
                     {{{1, delta}, delta - 1}, {{2, delta}, 1}, {{2, 2}, leg - 2}, {{1, 2}, 1}});
}

DegreeCensus broom_census(std::size_t n, int delta, int delta2) {
  if (delta2 == 2) return spider_census(n, delta);
  const auto spine = static_cast<std::int64_t>(n) - delta - delta2 + 2;
  DegreeCensus c;
  c.add_vertex(1, delta - 1 + delta2 - 1);
  c.add_vertex(2, spine - 2);
  c.add_vertex(delta);
  c.add_vertex(delta2);
  c.add_edge(1, delta, delta - 1);
  c.add_edge(1, delta2, delta2 - 1);
  if (spine == 2) {
    c.add_edge(delta, delta2);
  } else {
    c.add_edge(2, delta);
    c.add_edge(2, delta2);
    c.add_edge(2, 2, spine - 3);
  }
  return c;
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Path: return "Path";
    case FamilyKind::Star: return "Star";
    case FamilyKind::Spider: return "Spider";
    case FamilyKind::Broom: return "Broom";
    case FamilyKind::T1: return "T1";
    case FamilyKind::T2: return "T2";
    case FamilyKind::T3: return "T3";
    case FamilyKind::TT1: return "TT1";
    case FamilyKind::TT2: return "TT2";
    case FamilyKind::TT3: return "TT3";
    case FamilyKind::TT4: return "TT4";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (FamilyKind k : {FamilyKind::Path, FamilyKind::Star, FamilyKind::Spider, FamilyKind::Broom, FamilyKind::T1,
                       FamilyKind::T2, FamilyKind::T3, FamilyKind::TT1, FamilyKind::TT2, FamilyKind::TT3,
                       FamilyKind::TT4}) {
    const std::string_view name = to_string(k);
    if (name.size() == text.size() &&
        std::equal(name.begin(), name.end(), text.begin(),
                   [](char a, char b) { return std::tolower(static_cast<unsigned char>(a)) ==
                                               std::tolower(static_cast<unsigned char>(b)); })) {
      return k;
    }
  }
  return std::nullopt;
}

Tree make_path(std::size_t n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex i = 0; i + 1 < n; ++i) {
    adj[i].push_back(i + 1);
    adj[i + 1].push_back(i);
  }
  return Tree(std::move(adj));
}

Tree make_star(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  return attach_pendants(Tree::single_vertex(), 0, n - 1);
}

Tree make_spider(std::size_t n, int delta) {
  require(delta >= 3, "spider needs max degree >= 3");
  require(n >= static_cast<std::size_t>(delta) + 1, "spider needs n >= max degree + 1");
  const std::size_t leg = n - static_cast<std::size_t>(delta);
  std::vector<std::vector<Vertex>> adj(leg + 1);
  for (Vertex i = 0; i < leg; ++i) {
    adj[i].push_back(i + 1);
    adj[i + 1].push_back(i);
  }
  return attach_pendants(Tree(std::move(adj)), 0, static_cast<std::size_t>(delta) - 1);
}

Tree make_broom(std::size_t n, int delta, int delta2) {
  require(delta2 >= 2 && delta >= delta2, "broom needs max degree >= second degree >= 2");
  require(n >= static_cast<std::size_t>(delta + delta2), "broom needs n >= delta + delta2");
  const std::size_t spine = n - static_cast<std::size_t>(delta + delta2) + 2;
  Tree t = attach_pendants(make_path(spine), 0, static_cast<std::size_t>(delta) - 1);
  return attach_pendants(t, static_cast<Vertex>(spine - 1), static_cast<std::size_t>(delta2) - 1);
}

std::vector<Tree> make_t_opt(int variant, int k) {
  require_k(k);
  const Tree base = spine_with_even_pendants(k, 1);
  switch (variant) {
    case 1: return {base};
    case 2: return subdivide_odd_spine_edges(base, k);
    case 3: {
      const auto second = subdivide_odd_spine_edges(base, k);
      return merged(subdivide_next_to_degree_two(second), std::vector<Tree>{attach_pendants(base, 0, 2)},
                    attach_at_two_two_edges(second, 1));
    }
    default: break;
  }
  throw Error(ErrorKind::DomainViolation, "T-family variant must be 1, 2 or 3");
}

std::vector<Tree> make_tt_opt(int variant, int k) {
  require_k(k);
  const Tree base = spine_with_even_pendants(k, 2);
  if (variant == 1) return {base};
  const auto second = subdivide_odd_spine_edges(base, k);
  if (variant == 2) return second;
  const auto third = unique_classes(subdivide_next_to_degree_two(second));
  if (variant == 3) return third;
  if (variant == 4) {
    return merged(subdivide_next_to_degree_two(third), std::vector<Tree>{attach_pendants(base, 0, 3)},
                  attach_at_two_two_edges(second, 2));
  }
  throw Error(ErrorKind::DomainViolation, "TT-family variant must be 1, 2, 3 or 4");
}

std::vector<Tree> make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path: return {make_path(spec.n)};
    case FamilyKind::Star: return {make_star(spec.n)};
    case FamilyKind::Spider: return {make_spider(spec.n, spec.delta)};
    case FamilyKind::Broom: return {make_broom(spec.n, spec.delta, spec.delta2)};
    case FamilyKind::T1: return make_t_opt(1, spec.k);
    case FamilyKind::T2: return make_t_opt(2, spec.k);
    case FamilyKind::T3: return make_t_opt(3, spec.k);
    case FamilyKind::TT1: return make_tt_opt(1, spec.k);
    case FamilyKind::TT2: return make_tt_opt(2, spec.k);
    case FamilyKind::TT3: return make_tt_opt(3, spec.k);
    case FamilyKind::TT4: return make_tt_opt(4, spec.k);
  }
  return {};
}

std::size_t family_order(FamilyKind kind, int k) {
  require_k(k);
  const auto kk = static_cast<std::size_t>(k);
  switch (kind) {
    case FamilyKind::T1: return 3 * kk + 1;
    case FamilyKind::T2: return 3 * kk + 2;
    case FamilyKind::T3: return 3 * kk + 3;
    case FamilyKind::TT1: return 4 * kk + 1;
    case FamilyKind::TT2: return 4 * kk + 2;
    case FamilyKind::TT3: return 4 * kk + 3;
    case FamilyKind::TT4: return 4 * kk + 4;
    default: break;
  }
  throw Error(ErrorKind::DomainViolation, "family_order applies to T/TT kinds only");
}

std::vector<DegreeCensus> predicted_census(const FamilySpec& spec) {
  const std::int64_t k = spec.k;
  switch (spec.kind) {
    case FamilyKind::Path: {
      require(spec.n >= 2, "path needs n >= 2");
      const auto n = static_cast<std::int64_t>(spec.n);
      if (n == 2) return {make_census({{1, 2}}, {{{1, 1}, 1}})};
      return {make_census({{1, 2}, {2, n - 2}}, {{{1, 2}, 2}, {{2, 2}, n - 3}})};
    }
    case FamilyKind::Star: {
      require(spec.n >= 2, "star needs n >= 2");
      const auto n = static_cast<std::int64_t>(spec.n);
      if (n == 2) return {make_census({{1, 2}}, {{{1, 1}, 1}})};
      return {make_census({{1, n - 1}, {static_cast<int>(n - 1), 1}}, {{{1, static_cast<int>(n - 1)}, n - 1}})};
    }
    case FamilyKind::Spider:
      require(spec.delta >= 3 && spec.n >= static_cast<std::size_t>(spec.delta) + 1, "invalid spider parameters");
      return {spider_census(spec.n, spec.delta)};
    case FamilyKind::Broom:
      require(spec.delta2 >= 2 && spec.delta >= spec.delta2 &&
                  spec.n >= static_cast<std::size_t>(spec.delta + spec.delta2),
              "invalid broom parameters");
      return {broom_census(spec.n, spec.delta, spec.delta2)};
    default: break;
  }
  require_k(spec.k);
  switch (spec.kind) {
    case FamilyKind::T1:
      return {make_census({{1, k + 2}, {2, k - 1}, {3, k}}, {{{1, 3}, k + 2}, {{2, 3}, 2 * k - 2}})};
    case FamilyKind::T2:
      return {make_census({{1, k + 2}, {2, k}, {3, k}}, {{{1, 3}, k + 2}, {{2, 2}, 1}, {{2, 3}, 2 * k - 2}})};
    case FamilyKind::T3:
      return {make_census({{1, k + 2}, {2, k + 1}, {3, k}}, {{{1, 3}, k + 2}, {{2, 2}, 2}, {{2, 3}, 2 * k - 2}}),
              make_census({{1, k + 3}, {2, k - 1}, {3, k + 1}},
                          {{{1, 3}, k + 3}, {{3, 3}, 1}, {{2, 3}, 2 * k - 2}})};
    case FamilyKind::TT1:
      return {make_census({{1, 2 * k + 2}, {2, k - 1}, {4, k}}, {{{1, 4}, 2 * k + 2}, {{2, 4}, 2 * k - 2}})};
    case FamilyKind::TT2:
      return {make_census({{1, 2 * k + 2}, {2, k}, {4, k}},
                          {{{1, 4}, 2 * k + 2}, {{2, 2}, 1}, {{2, 4}, 2 * k - 2}})};
    case FamilyKind::TT3:
      return {make_census({{1, 2 * k + 2}, {2, k + 1}, {4, k}},
                          {{{1, 4}, 2 * k + 2}, {{2, 2}, 2}, {{2, 4}, 2 * k - 2}})};
    case FamilyKind::TT4:
      return {make_census({{1, 2 * k + 2}, {2, k + 2}, {4, k}},
                          {{{1, 4}, 2 * k + 2}, {{2, 2}, 3}, {{2, 4}, 2 * k - 2}}),
              make_census({{1, 2 * k + 4}, {2, k - 1}, {4, k + 1}},
                          {{{1, 4}, 2 * k + 4}, {{4, 4}, 1}, {{2, 4}, 2 * k - 2}})};
    default: break;
  }
  return {};
}

}  // namespace grm
