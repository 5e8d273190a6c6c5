#include "grm/indices.hpp"

#include <string>

#include "grm/error.hpp"

namespace grm {
namespace {

void require_edges(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorKind::SingletonTree, "index undefined for a single vertex");
}

Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

}  // namespace

Rational grm(const Tree& t, const Rational& lambda) {
  require_edges(t);
  Rational total;
  for (const Edge& e : t.edges()) {
    total += (as_rational(t.degree(e.u)) + lambda) * (as_rational(t.degree(e.v)) + lambda);
  }
  return total;
}

Rational first_zagreb(const Tree& t) {
  require_edges(t);
  std::int64_t total = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    auto d = static_cast<std::int64_t>(t.degree(v));
    total += d * d;
  }
  return Rational(total);
}

Rational second_zagreb(const Tree& t) {
  require_edges(t);
  std::int64_t total = 0;
  for (const Edge& e : t.edges()) {
    total += static_cast<std::int64_t>(t.degree(e.u)) * static_cast<std::int64_t>(t.degree(e.v));
  }
  return Rational(total);
}

Rational edge_weight(int i, int j, const Rational& lambda) { return (Rational(i) + lambda) * (Rational(j) + lambda); }

Rational census_grm(const DegreeCensus& c, const Rational& lambda) {
  Rational total;
  for (const auto& [key, count] : c.edge_counts()) {
    total += Rational(count) * edge_weight(key.first, key.second, lambda);
  }
  return total;
}

Rational closed_form(const ClosedFormShape& shape, const Rational& lambda) {
  struct Visitor {
    const Rational& lambda;

    Rational operator()(const PathShape& p) const {
      if (p.n < 3) throw Error(ErrorKind::DomainViolation, "path closed form needs n >= 3, got " + std::to_string(p.n));
      const Rational n = as_rational(p.n);
      return (Rational(2) + lambda) * (n * lambda + Rational(2) * n - lambda - Rational(4));
    }

    Rational operator()(const StarShape& s) const {
      if (s.n < 2) throw Error(ErrorKind::DomainViolation, "star closed form needs n >= 2, got " + std::to_string(s.n));
      const Rational n = as_rational(s.n);
      return (n - Rational(1)) * (n - Rational(1) + lambda) * (Rational(1) + lambda);
    }

    Rational operator()(const SpiderShape& s) const {
      if (s.max_degree < 3) {
        throw Error(ErrorKind::DomainViolation, "spider closed form needs max degree >= 3");
      }
      if (s.n < static_cast<std::size_t>(s.max_degree) + 2) {
        throw Error(ErrorKind::DomainViolation, "spider closed form needs n >= max degree + 2");
      }
      const Rational n = as_rational(s.n);
      const Rational d(s.max_degree);
      return (n * lambda + Rational(2) * n - d * lambda - d - Rational(3)) * (Rational(2) + lambda) +
             (d - Rational(1)) * (d + lambda) * (Rational(1) + lambda);
    }
  };
  return std::visit(Visitor{lambda}, shape);
}

}  // namespace grm
