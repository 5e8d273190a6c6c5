#include "grm/enumeration.hpp"

#include <algorithm>
#include <string>

#include "grm/canonical.hpp"
#include "grm/error.hpp"

namespace grm {
namespace {

// Every free tree has either one centroid whose branches all hold fewer than
// n/2 vertices, or (n even) two adjacent centroids splitting it n/2 | n/2.
// Unicentroidal classes therefore correspond one-to-one with multisets of
// rooted branch classes, and bicentroidal ones with unordered pairs, so
// generating those multisets over a catalog of rooted classes yields every
// free tree exactly once.

struct RootedShape {
  std::uint32_t size = 1;
  /// Maximum degree inside the branch, counting the edge up to its parent.
  std::uint32_t max_degree = 1;
  /// Child shape ids, non-increasing.
  std::vector<std::uint32_t> children;
};

/// All rooted trees up to `max_size` vertices in which every vertex has at
/// most `child_cap` children, ordered by size. Two shapes are equal iff their
/// child id multisets are equal, so ids identify rooted classes.
class RootedCatalog {
 public:
  RootedCatalog(std::size_t max_size, std::size_t child_cap)
      : max_size_(max_size), child_cap_(child_cap), first_(max_size + 2, 0) {
    shapes_.push_back(RootedShape{});
    first_[1] = 0;
    first_[2] = 1;
    std::vector<std::uint32_t> scratch;
    for (std::size_t s = 2; s <= max_size; ++s) {
      fill(s, s - 1, static_cast<std::uint32_t>(shapes_.size() - 1), scratch);
      first_[s + 1] = static_cast<std::uint32_t>(shapes_.size());
    }
  }

  const RootedShape& operator[](std::uint32_t id) const { return shapes_[id]; }
  std::uint32_t first_of_size(std::size_t s) const { return first_[s]; }
  /// One past the last id with size ≤ s.
  std::uint32_t end_of_size(std::size_t s) const { return first_[std::min(s, max_size_) + 1]; }

 private:
  void fill(std::size_t size, std::size_t remaining, std::uint32_t max_id, std::vector<std::uint32_t>& chosen) {
    if (remaining == 0) {
      RootedShape shape;
      shape.size = static_cast<std::uint32_t>(size);
      shape.children = chosen;
      shape.max_degree = static_cast<std::uint32_t>(chosen.size() + 1);
      for (auto c : chosen) shape.max_degree = std::max(shape.max_degree, shapes_[c].max_degree);
      shapes_.push_back(std::move(shape));
      return;
    }
    if (chosen.size() == child_cap_) return;
    std::uint32_t top = std::min<std::uint32_t>(max_id, first_[remaining + 1] - 1);
    for (std::uint32_t id = top + 1; id-- > 0;) {
      chosen.push_back(id);
      fill(size, remaining - shapes_[id].size, id, chosen);
      chosen.pop_back();
    }
  }

  std::size_t max_size_;
  std::size_t child_cap_;
  std::vector<RootedShape> shapes_;
  std::vector<std::uint32_t> first_;
};

/// A free tree as a centroid plus its branches; for the bicentroidal case the
/// root itself is branch `children[0]` and `children[1]` hangs off it.
struct FreeShape {
  bool bicentroidal = false;
  std::vector<std::uint32_t> children;
  std::uint32_t max_degree = 0;
};

class Walker {
 public:
  explicit Walker(const EnumSpec& spec) : spec_(spec) {
    if (spec.n == 0) throw Error(ErrorKind::DomainViolation, "tree order must be >= 1");
    if (spec.n > EnumSpec::kDefaultGuard && !spec.override_guard) {
      throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(spec.n) + " exceeds the enumeration guard of " +
                                                std::to_string(EnumSpec::kDefaultGuard) + "; override to proceed");
    }
    if (spec.exact_degree && !spec.max_degree) {
      throw Error(ErrorKind::DomainViolation, "exact degree requested without a degree value");
    }
    if (spec.max_degree && spec.n >= 3 && *spec.max_degree < 2) {
      throw Error(ErrorKind::DomainViolation, "degree cap must be >= 2 when n >= 3");
    }
    cap_ = spec.max_degree ? static_cast<std::size_t>(*spec.max_degree) : spec.n;
  }

  template <typename Visit>
  void run(Visit&& visit) {
    const std::size_t n = spec_.n;
    if (n <= 2) {
      run_tiny(visit);
      return;
    }
    catalog_.emplace(n / 2, cap_ - 1);
    FreeShape shape;
    uni(n - 1, catalog_->end_of_size((n - 1) / 2) - 1, shape, visit);
    if (n % 2 == 0) {
      const auto lo = catalog_->first_of_size(n / 2);
      const auto hi = catalog_->end_of_size(n / 2);
      for (std::uint32_t a = lo; a < hi; ++a) {
        for (std::uint32_t b = lo; b <= a; ++b) {
          shape.bicentroidal = true;
          shape.children = {a, b};
          shape.max_degree = std::max((*catalog_)[a].max_degree, (*catalog_)[b].max_degree);
          emit(shape, visit);
        }
      }
    }
  }

  Tree materialize(const FreeShape& shape) const {
    std::vector<std::vector<Vertex>> adj(1);
    if (shape.bicentroidal) {
      grow(0, shape.children[0], adj);
      grow_child(0, shape.children[1], adj);
    } else {
      for (auto c : shape.children) grow_child(0, c, adj);
    }
    return Tree(std::move(adj));
  }

 private:
  template <typename Visit>
  void run_tiny(Visit&& visit) {
    FreeShape shape;
    shape.max_degree = spec_.n == 1 ? 0 : 1;
    if (spec_.n == 2 && cap_ < 1) return;
    emit(shape, visit);
  }

  template <typename Visit>
  void emit(const FreeShape& shape, Visit&& visit) {
    if (spec_.exact_degree && static_cast<int>(shape.max_degree) != *spec_.max_degree) return;
    visit(shape);
  }

  template <typename Visit>
  void uni(std::size_t remaining, std::uint32_t max_id, FreeShape& shape, Visit&& visit) {
    if (remaining == 0) {
      shape.bicentroidal = false;
      std::uint32_t best = static_cast<std::uint32_t>(shape.children.size());
      for (auto c : shape.children) best = std::max(best, (*catalog_)[c].max_degree);
      shape.max_degree = best;
      emit(shape, visit);
      return;
    }
    if (shape.children.size() == cap_) return;
    const std::uint32_t top = std::min<std::uint32_t>(max_id, catalog_->end_of_size(remaining) - 1);
    for (std::uint32_t id = top + 1; id-- > 0;) {
      shape.children.push_back(id);
      uni(remaining - (*catalog_)[id].size, id, shape, visit);
      shape.children.pop_back();
    }
  }

  void grow(Vertex at, std::uint32_t id, std::vector<std::vector<Vertex>>& adj) const {
    for (auto c : (*catalog_)[id].children) grow_child(at, c, adj);
  }

  void grow_child(Vertex parent, std::uint32_t id, std::vector<std::vector<Vertex>>& adj) const {
    const auto v = static_cast<Vertex>(adj.size());
    adj.emplace_back();
    adj[parent].push_back(v);
    adj[v].push_back(parent);
    grow(v, id, adj);
  }

  const EnumSpec& spec_;
  std::size_t cap_ = 0;
  std::optional<RootedCatalog> catalog_;
};

}  // namespace

void for_each_tree(const EnumSpec& spec, const std::function<void(const Tree&)>& visit) {
  Walker walker(spec);
  walker.run([&](const FreeShape& shape) {
    if (spec.n == 1) {
      visit(Tree::single_vertex());
    } else if (spec.n == 2) {
      visit(build_tree({{0, 1}}));
    } else {
      visit(walker.materialize(shape));
    }
  });
}

std::vector<Tree> enumerate_trees(const EnumSpec& spec) {
  std::vector<std::pair<CanonicalCode, Tree>> keyed;
  for_each_tree(spec, [&](const Tree& t) { keyed.emplace_back(canonical_code(t), t); });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tree> out;
  out.reserve(keyed.size());
  for (auto& [code, tree] : keyed) out.push_back(std::move(tree));
  return out;
}

std::uint64_t count_trees(const EnumSpec& spec) {
  std::uint64_t total = 0;
  Walker walker(spec);
  walker.run([&](const FreeShape&) { ++total; });
  return total;
}

}  // namespace grm
