#include "grm/census_algebra.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "grm/error.hpp"
#include "grm/indices.hpp"

namespace grm {
namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

bool nonnegative_integer(const Rational& r) { return r.is_integer() && r.numerator() >= 0; }

void require_degree(const DegreeCensus& c, int cap) {
  if (c.max_degree() > cap) {
    throw Error(ErrorKind::DegreeBoundViolated,
                "census has max degree " + std::to_string(c.max_degree()) + " > " + std::to_string(cap));
  }
}

// ---- generic exact elimination -------------------------------------------

using Row = std::vector<Rational>;

/// Raw system over variables `names`; each equation is Σ coeff·var = rhs.
struct LinearSystem {
  std::vector<std::string> names;
  std::vector<Row> coefficients;
  std::vector<Rational> rhs;

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorKind::DomainViolation, "unknown census variable " + name);
    return static_cast<std::size_t>(it - names.begin());
  }
};

/// dependent[d] = map[d][0] + Σ_f map[d][1+f]·free[f]
std::vector<Row> affine_solution(const LinearSystem& sys, const std::vector<std::string>& dependent,
                                 const std::vector<std::string>& free) {
  const std::size_t rows = sys.coefficients.size();
  const std::size_t dep = dependent.size();
  const std::size_t width = dep + 1 + free.size();
  if (rows != dep) throw Error(ErrorKind::DomainViolation, "system must be square in the dependent variables");
  std::vector<Row> m(rows, Row(width));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t d = 0; d < dep; ++d) m[r][d] = sys.coefficients[r][sys.index_of(dependent[d])];
    m[r][dep] = sys.rhs[r];
    for (std::size_t f = 0; f < free.size(); ++f) m[r][dep + 1 + f] = -sys.coefficients[r][sys.index_of(free[f])];
  }
  for (std::size_t col = 0; col < dep; ++col) {
    std::size_t pivot = col;
    while (pivot < rows && m[pivot][col] == Rational(0)) ++pivot;
    if (pivot == rows) throw Error(ErrorKind::DomainViolation, "census system is singular in the dependents");
    std::swap(m[pivot], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == col || m[r][col] == Rational(0)) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < width; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<Row> out(dep);
  for (std::size_t d = 0; d < dep; ++d) out[d].assign(m[d].begin() + static_cast<std::ptrdiff_t>(dep), m[d].end());
  return out;
}

/// Probes a hard-coded affine solver at the origin and the unit vectors.
template <typename Solve>
EliminationCheck compare_affine(const std::vector<Row>& expected, const std::vector<std::string>& dependent,
                                const std::vector<std::string>& free, Solve&& solve) {
  EliminationCheck check;
  std::vector<std::int64_t> point(free.size(), 0);
  const CensusSolution origin = solve(point);
  for (std::size_t d = 0; d < dependent.size(); ++d) {
    const Rational constant = origin.value(dependent[d]);
    if (constant != expected[d][0]) {
      check.agrees = false;
      check.mismatches.push_back(dependent[d] + " constant: hard-coded " + constant.to_string() + ", elimination " +
                                 expected[d][0].to_string());
    }
  }
  for (std::size_t f = 0; f < free.size(); ++f) {
    point.assign(free.size(), 0);
    point[f] = 1;
    const CensusSolution probe = solve(point);
    for (std::size_t d = 0; d < dependent.size(); ++d) {
      const Rational coeff = probe.value(dependent[d]) - origin.value(dependent[d]);
      if (coeff != expected[d][1 + f]) {
        check.agrees = false;
        check.mismatches.push_back(dependent[d] + " coefficient of " + free[f] + ": hard-coded " + coeff.to_string() +
                                   ", elimination " + expected[d][1 + f].to_string());
      }
    }
  }
  return check;
}

LinearSystem raw_system(const std::vector<std::string>& names, int max_degree) {
  LinearSystem sys;
  sys.names = names;
  auto row = [&](std::initializer_list<std::pair<std::string, std::int64_t>> terms, std::int64_t rhs) {
    Row r(names.size());
    for (const auto& [name, c] : terms) r[sys.index_of(name)] += Rational(c);
    sys.coefficients.push_back(std::move(r));
    sys.rhs.push_back(Rational(rhs));
  };
  if (max_degree == 3) {
    row({{"n1", 1}, {"n2", 1}, {"n3", 1}, {"n", -1}}, 0);
    row({{"n1", 1}, {"n2", 2}, {"n3", 3}, {"n", -2}}, -2);
    row({{"m12", 1}, {"m13", 1}, {"n1", -1}}, 0);
    row({{"m12", 1}, {"m22", 2}, {"m23", 1}, {"n2", -2}}, 0);
    row({{"m13", 1}, {"m23", 1}, {"m33", 2}, {"n3", -3}}, 0);
  } else {
    row({{"n1", 1}, {"n2", 1}, {"n3", 1}, {"n4", 1}, {"n", -1}}, 0);
    row({{"n1", 1}, {"n2", 2}, {"n3", 3}, {"n4", 4}, {"n", -2}}, -2);
    row({{"m12", 1}, {"m13", 1}, {"m14", 1}, {"n1", -1}}, 0);
    row({{"m12", 1}, {"m22", 2}, {"m23", 1}, {"m24", 1}, {"n2", -2}}, 0);
    row({{"m13", 1}, {"m23", 1}, {"m33", 2}, {"m34", 1}, {"n3", -3}}, 0);
    row({{"m14", 1}, {"m24", 1}, {"m34", 1}, {"m44", 2}, {"n4", -4}}, 0);
  }
  return sys;
}

const std::vector<std::string> kD3Dependent{"n1", "n2", "m33", "m13", "m12"};
const std::vector<std::string> kD3Free{"n", "n3", "m22", "m23"};
const std::vector<std::string> kD4Dependent{"n1", "n2", "n4", "m14", "m24", "m33"};
const std::vector<std::string> kD4Free{"n", "n3", "m12", "m13", "m22", "m23", "m34", "m44"};

}  // namespace

Rational CensusSolution::value(const std::string& name) const {
  for (const auto& [key, v] : derived) {
    if (key == name) return v;
  }
  throw Error(ErrorKind::DomainViolation, "no derived variable " + name);
}

CensusSolution solve_census_d3(const FreeCensusVarsD3& v) {
  const std::int64_t n = v.n, n3 = v.n3, m22 = v.m22, m23 = v.m23;
  CensusSolution s;
  s.derived = {
      {"n1", q(2 + n3)},
      {"n2", q(n - 2 - 2 * n3)},
      {"m33", q(n - n3 - 3 - m22 - m23)},
      {"m13", q(5 * n3 + 2 * m22 + m23 - 2 * n + 6)},
      {"m12", q(2 * n - 4 * n3 - 2 * m22 - m23 - 4)},
  };
  s.realizable = n3 >= 0 && m22 >= 0 && m23 >= 0 &&
                 std::all_of(s.derived.begin(), s.derived.end(), [](const auto& d) { return nonnegative_integer(d.second); });
  if (s.realizable) {
    DegreeCensus c;
    c.set_vertices(1, s.value("n1").numerator());
    c.set_vertices(2, s.value("n2").numerator());
    c.set_vertices(3, n3);
    c.set_edges(1, 2, s.value("m12").numerator());
    c.set_edges(1, 3, s.value("m13").numerator());
    c.set_edges(2, 2, m22);
    c.set_edges(2, 3, m23);
    c.set_edges(3, 3, s.value("m33").numerator());
    s.census = std::move(c);
  }
  return s;
}

CensusSolution solve_census_d4(const FreeCensusVarsD4& v) {
  const Rational n = q(v.n), n3 = q(v.n3), m12 = q(v.m12), m13 = q(v.m13), m22 = q(v.m22), m23 = q(v.m23),
                 m34 = q(v.m34), m44 = q(v.m44);
  CensusSolution s;
  s.derived = {
      {"n1", -m12 / q(2) - m13 / q(4) - m22 / q(2) - m23 / q(4) + m34 / q(4) + m44 / q(2) + n / q(2) + n3 / q(4) +
                 q(3, 2)},
      {"n2", q(3) * m12 / q(4) + q(3) * m13 / q(8) + q(3) * m22 / q(4) + q(3) * m23 / q(8) - q(3) * m34 / q(8) -
                 q(3) * m44 / q(4) + n / q(4) - q(7) * n3 / q(8) - q(5, 4)},
      {"n4", -m12 / q(4) - m13 / q(8) - m22 / q(4) - m23 / q(8) + m34 / q(8) + m44 / q(4) + n / q(4) -
                 q(3) * n3 / q(8) - q(1, 4)},
      {"m14", -q(3) * m12 / q(2) - q(5) * m13 / q(4) - m22 / q(2) - m23 / q(4) + m34 / q(4) + m44 / q(2) + n / q(2) +
                  n3 / q(4) + q(3, 2)},
      {"m24", m12 / q(2) + q(3) * m13 / q(4) - m22 / q(2) - m23 / q(4) - q(3) * m34 / q(4) - q(3) * m44 / q(2) +
                  n / q(2) - q(7) * n3 / q(4) - q(5, 2)},
      {"m33", -m13 / q(2) - m23 / q(2) - m34 / q(2) + q(3) * n3 / q(2)},
  };
  const bool free_ok = v.n3 >= 0 && v.m12 >= 0 && v.m13 >= 0 && v.m22 >= 0 && v.m23 >= 0 && v.m34 >= 0 && v.m44 >= 0;
  s.realizable = free_ok && std::all_of(s.derived.begin(), s.derived.end(),
                                        [](const auto& d) { return nonnegative_integer(d.second); });
  if (s.realizable) {
    DegreeCensus c;
    c.set_vertices(1, s.value("n1").numerator());
    c.set_vertices(2, s.value("n2").numerator());
    c.set_vertices(3, v.n3);
    c.set_vertices(4, s.value("n4").numerator());
    c.set_edges(1, 2, v.m12);
    c.set_edges(1, 3, v.m13);
    c.set_edges(1, 4, s.value("m14").numerator());
    c.set_edges(2, 2, v.m22);
    c.set_edges(2, 3, v.m23);
    c.set_edges(2, 4, s.value("m24").numerator());
    c.set_edges(3, 3, s.value("m33").numerator());
    c.set_edges(3, 4, v.m34);
    c.set_edges(4, 4, v.m44);
    s.census = std::move(c);
  }
  return s;
}

FreeCensusVarsD3 free_vars_d3(const DegreeCensus& c) {
  require_degree(c, 3);
  return {c.order(), c.vertices(3), c.edges(2, 2), c.edges(2, 3)};
}

FreeCensusVarsD4 free_vars_d4(const DegreeCensus& c) {
  require_degree(c, 4);
  return {c.order(),     c.vertices(3), c.edges(1, 2), c.edges(1, 3),
          c.edges(2, 2), c.edges(2, 3), c.edges(3, 4), c.edges(4, 4)};
}

Rational grm2_census_d3(const DegreeCensus& c) {
  require_degree(c, 3);
  return q(c.edges(3, 3) - c.edges(1, 3));
}

Rational grm2_census_d4(const DegreeCensus& c) {
  require_degree(c, 4);
  const std::int64_t negated = -3 * c.edges(1, 2) - c.edges(1, 3) - c.edges(2, 2) - c.edges(3, 4) -
                               3 * c.edges(4, 4) + c.order() - c.vertices(3) + 3;
  return q(-negated);
}

Rational theorem_bound(int delta, std::size_t n, const Rational& lambda) {
  const auto nn = static_cast<std::int64_t>(n);
  if (lambda == Rational(-2)) {
    if (delta == 3 && n >= 7) return q(-((nn - 1) / 3 + 2));
    if (delta == 4 && n >= 5) {
      switch (nn % 4) {
        case 1: return q(-(nn + 3));
        case 2: return q(-(nn + 2));
        case 3: return q(-(nn + 1));
        default: return q(-nn);
      }
    }
    throw Error(ErrorKind::UnsupportedRegime, "no bound at lambda = -2 for max degree " + std::to_string(delta) +
                                                  ", n = " + std::to_string(n));
  }
  if (lambda >= Rational(-1)) {
    if (n >= 4 && delta >= 3 && static_cast<std::size_t>(delta) + 2 <= n) {
      return closed_form(SpiderShape{n, delta}, lambda);
    }
    throw Error(ErrorKind::UnsupportedRegime,
                "lambda >= -1 bound needs n >= 4 and 3 <= max degree <= n - 2");
  }
  throw Error(ErrorKind::UnsupportedRegime, "no bound for lambda = " + lambda.to_string());
}

std::vector<DegreeCensus> optimal_census_catalog(int delta, std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  std::vector<DegreeCensus> out;
  if (delta == 3 && n >= 7) {
    const std::int64_t k = (nn - 1) / 3;
    const std::int64_t r = nn - 3 * k;
    DegreeCensus base;
    base.set_vertices(1, k + 2);
    base.set_vertices(2, k + r - 2);
    base.set_vertices(3, k);
    base.set_edges(1, 3, k + 2);
    base.set_edges(2, 3, 2 * k - 2);
    base.set_edges(2, 2, r - 1);
    out.push_back(base);
    if (r == 3) {
      DegreeCensus alt;
      alt.set_vertices(1, k + 3);
      alt.set_vertices(2, nn - 2 * k - 4);
      alt.set_vertices(3, k + 1);
      alt.set_edges(1, 3, k + 3);
      alt.set_edges(3, 3, 1);
      alt.set_edges(2, 3, 2 * k - 2);
      out.push_back(alt);
    }
  } else if (delta == 4 && n >= 5) {
    const std::int64_t k = (nn - 1) / 4;
    const std::int64_t r = nn - 4 * k;
    DegreeCensus base;
    base.set_vertices(1, 2 * k + 2);
    base.set_vertices(2, k - 1 + (r - 1));
    base.set_vertices(4, k);
    base.set_edges(1, 4, 2 * k + 2);
    base.set_edges(2, 4, 2 * k - 2);
    base.set_edges(2, 2, r - 1);
    out.push_back(base);
    if (r == 4) {
      DegreeCensus alt;
      alt.set_vertices(1, 2 * k + 4);
      alt.set_vertices(2, k - 1);
      alt.set_vertices(4, k + 1);
      alt.set_edges(1, 4, 2 * k + 4);
      alt.set_edges(2, 4, 2 * k - 2);
      alt.set_edges(4, 4, 1);
      out.push_back(alt);
    }
  } else {
    throw Error(ErrorKind::UnsupportedRegime, "optimal census catalog exists for max degree 3 (n >= 7) and 4 (n >= 5)");
  }
  std::sort(out.begin(), out.end());
  return out;
}

EliminationCheck cross_check_d3() {
  std::vector<std::string> names{"n", "n1", "n2", "n3", "m12", "m13", "m22", "m23", "m33"};
  const auto expected = affine_solution(raw_system(names, 3), kD3Dependent, kD3Free);
  return compare_affine(expected, kD3Dependent, kD3Free, [](const std::vector<std::int64_t>& p) {
    return solve_census_d3({p[0], p[1], p[2], p[3]});
  });
}

EliminationCheck cross_check_d4() {
  std::vector<std::string> names{"n",   "n1",  "n2",  "n3",  "n4",  "m12", "m13",
                                 "m14", "m22", "m23", "m24", "m33", "m34", "m44"};
  const auto expected = affine_solution(raw_system(names, 4), kD4Dependent, kD4Free);
  return compare_affine(expected, kD4Dependent, kD4Free, [](const std::vector<std::int64_t>& p) {
    return solve_census_d4({p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]});
  });
}

SweepResult census_sweep_minimum(int delta, std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  std::optional<Rational> best;
  std::vector<DegreeCensus> minimizers;
  auto offer = [&](const DegreeCensus& c) {
    const Rational value = census_grm(c, Rational(-2));
    if (!best || value < *best) {
      best = value;
      minimizers.clear();
    }
    if (value == *best) minimizers.push_back(c);
  };

  if (delta == 3) {
    for (std::int64_t n3 = 1; n3 <= nn; ++n3) {
      for (std::int64_t m22 = 0; m22 <= nn; ++m22) {
        for (std::int64_t m23 = 0; m23 <= 3 * nn; ++m23) {
          auto s = solve_census_d3({nn, n3, m22, m23});
          if (s.realizable) offer(*s.census);
        }
      }
    }
  } else if (delta == 4) {
    // GRM_{-2} = s - (n+3) with s = 3m12 + m13 + m22 + m34 + 3m44 + n3 ≥ 0, so
    // sweeping s upward and stopping at the first feasible level finds the
    // global minimum while only visiting small free-variable values. The
    // value itself is always recomputed from the census edge weights.
    for (std::int64_t level = 0; level <= 6 * nn && !best; ++level) {
      for (std::int64_t m12 = 0; 3 * m12 <= level; ++m12) {
        for (std::int64_t m44 = 0; 3 * m12 + 3 * m44 <= level; ++m44) {
          for (std::int64_t m13 = 0; 3 * m12 + 3 * m44 + m13 <= level; ++m13) {
            for (std::int64_t m22 = 0; 3 * m12 + 3 * m44 + m13 + m22 <= level; ++m22) {
              for (std::int64_t m34 = 0; 3 * m12 + 3 * m44 + m13 + m22 + m34 <= level; ++m34) {
                const std::int64_t n3 = level - (3 * m12 + 3 * m44 + m13 + m22 + m34);
                for (std::int64_t m23 = 0; m23 <= 3 * nn; ++m23) {
                  auto s = solve_census_d4({nn, n3, m12, m13, m22, m23, m34, m44});
                  if (!s.realizable || s.census->vertices(4) < 1) continue;
                  if (census_grm(*s.census, Rational(-2)) != Rational(level - (nn + 3))) {
                    throw Error(ErrorKind::DomainViolation, "census identity failed during sweep");
                  }
                  offer(*s.census);
                }
              }
            }
          }
        }
      }
    }
  } else {
    throw Error(ErrorKind::UnsupportedRegime, "census sweep supports max degree 3 and 4");
  }
  if (!best) throw Error(ErrorKind::DomainViolation, "no feasible census for n = " + std::to_string(n));
  std::sort(minimizers.begin(), minimizers.end());
  minimizers.erase(std::unique(minimizers.begin(), minimizers.end()), minimizers.end());
  return SweepResult{*best, std::move(minimizers)};
}

}  // namespace grm
