// Copyright 2026 The Kakeya-Fq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kakeya/polymethod.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "kakeya/kakeya_set.hpp"

namespace kakeya {
namespace {

using Naive = std::map<std::vector<unsigned>, Rep>;

Monomial mono(std::vector<unsigned> e) { return Monomial{std::move(e)}; }

Rep pick(std::mt19937& rng, std::uint64_t bound) { return static_cast<Rep>(rng() % bound); }

Point random_point(std::mt19937& rng, std::uint32_t q, std::size_t n) {
  Point a{std::vector<Rep>(n)};
  for (auto& c : a.coords) c = pick(rng, q);
  return a;
}

MultiPoly random_poly(std::mt19937& rng, const FieldPtr& f, std::size_t n, unsigned terms) {
  MultiPoly g(f, n);
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<unsigned> e(n);
    for (auto& v : e) v = pick(rng, f->q());
    g.add_to(mono(e), pick(rng, f->q()));
  }
  return g;
}

Naive naive_mul(const Field& f, const Naive& a, const Naive& b) {
  Naive out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = f.add(out[e], f.mul(ca, cb));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// g(x + a) by repeated multiplication of (x_i + a_i); no binomials.
Naive naive_shift(const MultiPoly& g, const Point& a) {
  const Field& f = g.field();
  const std::size_t n = g.dim();
  Naive out;
  for (const auto& [m, c] : g.terms()) {
    Naive term{{std::vector<unsigned>(n, 0), c}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<unsigned> xi(n, 0);
      xi[i] = 1;
      Naive lin{{xi, 1}};
      if (a.coords[i] != 0) lin[std::vector<unsigned>(n, 0)] = a.coords[i];
      for (unsigned k = 0; k < m.exponents[i]; ++k) term = naive_mul(f, term, lin);
    }
    for (const auto& [e, v] : term) out[e] = f.add(out[e], v);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

unsigned naive_multiplicity(const MultiPoly& g, const Point& a) {
  unsigned best = kInfiniteMultiplicity;
  for (const auto& [e, c] : naive_shift(g, a)) {
    unsigned d = 0;
    for (auto v : e) d += v;
    best = std::min(best, d);
  }
  return best;
}

// Remainder of schoolbook long division by (t - t0)^m.
bool naive_divisible(const UniPoly& g, Rep t0, unsigned m) {
  const Field& f = g.field();
  UniPoly d(g.field_ptr(), {1});
  const UniPoly lin(g.field_ptr(), {f.neg(t0), 1});
  for (unsigned i = 0; i < m; ++i) d = d * lin;
  std::vector<Rep> r = g.coeffs();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  for (std::size_t top = r.size(); top-- > dd;) {
    const Rep c = r[top];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[top - dd + j] = f.sub(r[top - dd + j], f.mul(c, d.coeff(j)));
  }
  for (auto v : r) {
    if (v != 0) return false;
  }
  return true;
}

TEST(Monomial, GradedLexOrder) {
  EXPECT_LT(mono({0, 0}), mono({0, 1}));
  EXPECT_LT(mono({0, 1}), mono({1, 0}));
  EXPECT_LT(mono({2, 0}), mono({0, 3}));
}

TEST(BinomialModP, LucasMatchesPascalTable) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const BinomialModP binom(p);
    std::vector<std::vector<std::uint32_t>> pascal(80, std::vector<std::uint32_t>(80, 0));
    for (std::size_t a = 0; a < 80; ++a) {
      pascal[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) pascal[a][b] = (pascal[a - 1][b - 1] + pascal[a - 1][b]) % p;
    }
    for (std::uint64_t a = 0; a < 80; ++a) {
      for (std::uint64_t b = 0; b < 80; ++b) ASSERT_EQ(binom(a, b), pascal[a][b]) << p;
    }
  }
}

TEST(MonomialBasis, Examples) {
  auto f2 = Field::make(2);
  const auto basis = monomial_basis(2, *f2, 1);
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(basis[0], mono({0, 0}));
  EXPECT_EQ(basis[1], mono({0, 1}));
  EXPECT_EQ(basis[2], mono({1, 0}));
  EXPECT_EQ(monomial_basis(3, *Field::make(5), 2).size(), 115u);
  EXPECT_THROW(monomial_basis(2, *f2, 0), std::invalid_argument);
}

TEST(MonomialBasis, LengthMatchesCountAndBruteForce) {
  for (auto q : {2u, 3u, 4u, 5u}) {
    auto f = Field::make(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (unsigned m = 1; m <= 4; ++m) {
        const auto basis = monomial_basis(n, *f, m);
        const PointIndexer all(q, n);
        std::uint64_t brute = 0;
        for (std::uint64_t i = 0; i < all.size(); ++i) {
          std::uint64_t d = 0;
          for (auto c : all.point(i).coords) d += c;
          brute += d < std::uint64_t{m} * q;
        }
        EXPECT_EQ(basis.size(), brute);
        EXPECT_EQ(BigInt(basis.size()), count_Nq(static_cast<unsigned>(n), q, m));
        EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
        if (m >= n) {
          EXPECT_EQ(basis.size(), all.size());
        }
      }
    }
  }
}

TEST(ShiftConstraintRows, RowCounts) {
  auto f = Field::make(5);
  const auto basis = monomial_basis(2, *f, 2);
  EXPECT_EQ(shift_constraint_rows(*f, Point{{1, 2}}, 1, basis).size(), 1u);
  EXPECT_EQ(shift_constraint_rows(*f, Point{{1, 2}}, 2, basis).size(), 3u);
  EXPECT_EQ(shift_constraint_rows(*f, Point{{1, 2, 3}}, 3, monomial_basis(3, *f, 3)).size(), 10u);
}

TEST(ShiftConstraintRows, SingleRowIsEvaluation) {
  auto f = Field::make(7);
  const auto basis = monomial_basis(2, *f, 1);
  const Point a{{3, 5}};
  const auto rows = shift_constraint_rows(*f, a, 1, basis);
  ASSERT_EQ(rows.size(), 1u);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    MultiPoly g(f, 2);
    g.set(basis[c], 1);
    EXPECT_EQ(rows[0].coeffs[c], evaluate(g, a));
  }
}

TEST(ShiftConstraintRows, ZeroShiftPicksCoefficients) {
  auto f = Field::make(3);
  const auto basis = monomial_basis(2, *f, 3);
  for (const auto& row : shift_constraint_rows(*f, origin(2), 3, basis)) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      EXPECT_EQ(row.coeffs[c], basis[c] == row.target ? 1u : 0u);
    }
  }
}

TEST(ShiftConstraintRows, MatchNaiveExpansion) {
  std::mt19937 rng(17);
  for (auto q : {2u, 3u, 4u, 5u, 9u}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const unsigned m = 1 + trial % 3;
      // Every monomial with individual degree <= q - 1.
      const auto basis = monomial_basis(n, *f, static_cast<unsigned>(n));
      const Point a = random_point(rng, q, n);
      const MultiPoly g = random_poly(rng, f, n, 6);
      const Naive shifted = naive_shift(g, a);
      for (const auto& row : shift_constraint_rows(*f, a, m, basis)) {
        Rep lhs = 0;
        for (std::size_t c = 0; c < basis.size(); ++c) lhs = f->add(lhs, f->mul(row.coeffs[c], g.coeff(basis[c])));
        auto it = shifted.find(row.target.exponents);
        ASSERT_EQ(lhs, it == shifted.end() ? 0u : it->second);
      }
    }
  }
}

TEST(Solver, NullspaceExample) {
  auto f = Field::make(5);
  // x0 + 2 x1 = 0, x2 = 0 -> (3, 1, 0) with x1 the first free column.
  std::vector<std::vector<Rep>> mat = {{1, 2, 0}, {0, 0, 1}};
  const auto x = nullspace_vector(*f, mat, 3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (std::vector<Rep>{3, 1, 0}));
  EXPECT_FALSE(nullspace_vector(*f, {{1, 0}, {0, 1}}, 2).has_value());
}

TEST(FindVanishingPoly, SinglePointOrderOne) {
  auto f = Field::make(3);
  const auto g = find_vanishing_poly(f, {Point{{0, 0}}}, 2, 1);
  EXPECT_FALSE(g.is_zero());
  EXPECT_EQ(evaluate(g, Point{{0, 0}}), 0u);
}

TEST(FindVanishingPoly, SinglePointOrderTwo) {
  auto f = Field::make(3);
  const auto g = find_vanishing_poly(f, {Point{{0, 0}}}, 2, 2);
  EXPECT_FALSE(g.is_zero());
  EXPECT_EQ(g.coeff(mono({0, 0})), 0u);
  EXPECT_EQ(g.coeff(mono({1, 0})), 0u);
  EXPECT_EQ(g.coeff(mono({0, 1})), 0u);
}

TEST(FindVanishingPoly, WholeSpaceRefused) {
  for (auto q : {2u, 3u, 5u}) {
    auto f = Field::make(q);
    for (std::size_t n = 2; n <= 3; ++n) {
      std::vector<Point> all;
      const PointIndexer idx(q, n);
      for (std::uint64_t i = 0; i < idx.size(); ++i) all.push_back(idx.point(i));
      try {
        find_vanishing_poly(f, all, n, 1);
        FAIL() << "accepted the whole space";
      } catch (const BoundNotSatisfied& e) {
        EXPECT_EQ(e.constraints(), BigInt(idx.size()));
        EXPECT_EQ(e.unknowns(), binomial(q - 1 + n, n));
        EXPECT_NE(std::string(e.what()).find("bound not satisfied"), std::string::npos);
      }
    }
  }
}

TEST(FindVanishingPoly, Errors) {
  auto f = Field::make(3);
  EXPECT_THROW(find_vanishing_poly(f, {Point{{0, 0}}}, 2, 0), std::invalid_argument);
  EXPECT_THROW(find_vanishing_poly(f, {Point{{0, 3}}}, 2, 1), std::invalid_argument);
}

TEST(FindVanishingPoly, SoundOnRandomInstances) {
  std::mt19937 rng(23);
  for (auto q : {2u, 3u, 4u, 5u, 7u}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const unsigned m = 1 + trial % 3;
      const BigInt cap = count_Nq(static_cast<unsigned>(n), q, m);
      const BigInt per = binomial(m + n - 1, n);
      std::vector<Point> pts;
      const std::size_t want = 1 + pick(rng, 6);
      while (pts.size() < want && per * (pts.size() + 1) < cap) pts.push_back(random_point(rng, q, n));
      if (pts.empty()) continue;
      const auto g = find_vanishing_poly(f, pts, n, m);
      ASSERT_FALSE(g.is_zero());
      EXPECT_LT(g.degree(), static_cast<long>(m * q));
      for (const auto& [mono_e, c] : g.terms()) {
        for (auto e : mono_e.exponents) EXPECT_LE(e, q - 1);
      }
      for (const auto& a : pts) {
        EXPECT_GE(naive_multiplicity(g, a), m);
        EXPECT_GE(multiplicity_at(g, a), m);
      }
      // Deterministic.
      EXPECT_EQ(find_vanishing_poly(f, pts, n, m), g);
    }
  }
}

TEST(Multiplicity, Examples) {
  auto f = Field::make(5);
  MultiPoly x2y(f, 2);
  x2y.set(mono({2, 1}), 1);
  EXPECT_EQ(multiplicity_at(x2y, origin(2)), 3u);
  MultiPoly lin(f, 2);
  lin.set(mono({1, 0}), 1);
  lin.set(mono({0, 1}), 1);
  EXPECT_EQ(multiplicity_at(lin, Point{{1, 4}}), 1u);
  EXPECT_EQ(multiplicity_at(lin, Point{{1, 1}}), 0u);
  EXPECT_EQ(multiplicity_at(MultiPoly(f, 2), origin(2)), kInfiniteMultiplicity);
}

TEST(Multiplicity, MatchesNaiveAndAnnihilatesRows) {
  std::mt19937 rng(29);
  for (auto q : {2u, 3u, 4u, 5u}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const MultiPoly g = random_poly(rng, f, n, 1 + trial % 5);
      if (g.is_zero()) continue;
      const Point a = random_point(rng, q, n);
      const unsigned mult = multiplicity_at(g, a);
      ASSERT_EQ(mult, naive_multiplicity(g, a));
      const unsigned m = std::min(mult, 3u);
      if (m == 0) continue;
      const auto basis = monomial_basis(n, *f, static_cast<unsigned>(n));
      for (const auto& row : shift_constraint_rows(*f, a, m, basis)) {
        Rep s = 0;
        for (std::size_t c = 0; c < basis.size(); ++c) s = f->add(s, f->mul(row.coeffs[c], g.coeff(basis[c])));
        EXPECT_EQ(s, 0u);
      }
    }
  }
}

TEST(RestrictToLine, Examples) {
  auto f = Field::make(5);
  MultiPoly x2y(f, 2);
  x2y.set(mono({2, 1}), 1);
  const auto r = restrict_to_line(x2y, {origin(2), Direction{{1, 1}}});
  EXPECT_EQ(r.coeffs(), (std::vector<Rep>{0, 0, 0, 1}));
  MultiPoly c(f, 2);
  c.set(mono({0, 0}), 3);
  EXPECT_EQ(restrict_to_line(c, {Point{{2, 2}}, Direction{{1, 4}}}).coeffs(), std::vector<Rep>{3});
}

TEST(RestrictToLine, AgreesPointwise) {
  std::mt19937 rng(31);
  for (auto q : {3u, 4u, 7u, 8u}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const MultiPoly g = random_poly(rng, f, n, 5);
      const Point a = random_point(rng, q, n);
      Direction b{random_point(rng, q, n).coords};
      const UniPoly r = restrict_to_line(g, {a, b});
      EXPECT_LE(r.degree(), g.degree());
      for (Rep t = 0; t < q; ++t) ASSERT_EQ(r(t), evaluate(g, line_point(*f, a, t, b)));
    }
  }
}

TEST(RestrictToLine, MultiplicityGivesRepeatedRoot) {
  std::mt19937 rng(37);
  int exercised = 0;
  for (auto q : {3u, 4u, 5u, 7u}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2;
      const Point a = random_point(rng, q, n);
      Direction b{random_point(rng, q, n).coords};
      if (b.is_zero()) continue;
      const Rep t0 = pick(rng, q);
      const Point p = line_point(*f, a, t0, b);
      // Force a high multiplicity at p with a vanishing polynomial.
      const unsigned m = 1 + trial % 3;
      MultiPoly g(f, n);
      try {
        g = find_vanishing_poly(f, {p}, n, m);
      } catch (const BoundNotSatisfied&) {
        continue;
      }
      const unsigned mult = multiplicity_at(g, p);
      ASSERT_GE(mult, m);
      const UniPoly r = restrict_to_line(g, {a, b});
      if (r.is_zero()) continue;
      EXPECT_TRUE(naive_divisible(r, t0, mult));
      EXPECT_TRUE(r.divisible_by_power(t0, mult));
      ++exercised;
    }
  }
  EXPECT_GT(exercised, 50);
}

TEST(LeadingHomogeneous, Examples) {
  auto f = Field::make(5);
  MultiPoly g(f, 2);
  g.set(mono({2, 0}), 1);
  g.set(mono({0, 1}), 1);
  MultiPoly g0(f, 2);
  g0.set(mono({2, 0}), 1);
  EXPECT_EQ(leading_homogeneous(g), g0);
  EXPECT_EQ(leading_homogeneous(g0), g0);
  EXPECT_THROW(leading_homogeneous(MultiPoly(f, 2)), std::invalid_argument);
}

TEST(LeadingHomogeneous, TopCoefficientOfRestriction) {
  std::mt19937 rng(41);
  for (auto q : {3u, 5u, 8u, 9u}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const MultiPoly g = random_poly(rng, f, n, 6);
      if (g.is_zero()) continue;
      const MultiPoly g0 = leading_homogeneous(g);
      const auto d = static_cast<std::size_t>(g.degree());
      for (const auto& [m, c] : g0.terms()) EXPECT_EQ(m.total_degree(), d);
      const Point a = random_point(rng, q, n);
      const Direction b{random_point(rng, q, n).coords};
      const UniPoly r = restrict_to_line(g, {a, b});
      EXPECT_EQ(r.coeff(d), evaluate(g0, Point{b.coords}));
      const UniPoly rest = r - UniPoly::monomial(g.field_ptr(), evaluate(g0, Point{b.coords}), d);
      EXPECT_LT(rest.degree(), static_cast<long>(d));
    }
  }
}

TEST(Evaluate, Examples) {
  auto f = Field::make(5);
  MultiPoly one(f, 2);
  one.set(mono({0, 0}), 1);
  EXPECT_EQ(evaluate(one, Point{{4, 2}}), 1u);
  MultiPoly x2y(f, 2);
  x2y.set(mono({2, 1}), 1);
  EXPECT_EQ(evaluate(x2y, Point{{2, 3}}), 2u);
  EXPECT_THROW(evaluate(x2y, Point{{2, 3, 1}}), std::invalid_argument);
}

TEST(Evaluate, Linear) {
  std::mt19937 rng(43);
  auto f = Field::make(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_poly(rng, f, 3, 4);
    const auto h = random_poly(rng, f, 3, 4);
    const Point a = random_point(rng, 7, 3);
    EXPECT_EQ(evaluate(g + h, a), f->add(evaluate(g, a), evaluate(h, a)));
  }
}

TEST(MultiPoly, DegreeCapEnforced) {
  auto f = Field::make(3);
  MultiPoly g(f, 2);
  EXPECT_THROW(g.set(mono({3, 0}), 1), std::invalid_argument);
  EXPECT_THROW(g.set(mono({1}), 1), std::invalid_argument);
  EXPECT_THROW(g.set(mono({1, 0}), 3), std::invalid_argument);
  g.set(mono({1, 0}), 2);
  g.set(mono({1, 0}), 0);
  EXPECT_TRUE(g.is_zero());
}

// Low-degree polynomials with individual degree <= q - 1 are determined by
// their values on F_q^n.
TEST(MultiPoly, NonzeroPolynomialHasNonzeroValue) {
  std::mt19937 rng(47);
  for (auto q : {2u, 3u, 4u, 5u}) {
    auto f = Field::make(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      const PointIndexer idx(q, n);
      for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_poly(rng, f, n, 1 + trial % 6);
        bool nonzero_value = false;
        for (std::uint64_t i = 0; i < idx.size() && !nonzero_value; ++i) {
          nonzero_value = evaluate(g, idx.point(i)) != 0;
        }
        EXPECT_EQ(nonzero_value, !g.is_zero());
      }
    }
  }
}

// Replays the counting argument on sets that satisfy the solver's hypothesis:
// the restriction to any line inside S has at least m q roots counted with
// multiplicity, more than its degree, so it vanishes, and the leading form
// vanishes at that direction.
TEST(Pipeline, LinesInsideVanishingSetKillLeadingForm) {
  struct Case {
    std::uint32_t q;
    unsigned m;
    std::vector<std::pair<Point, Direction>> lines;
  };
  const std::vector<Case> cases = {
      {5, 1, {{Point{{0, 0}}, Direction{{1, 0}}}, {Point{{0, 0}}, Direction{{1, 2}}}}},
      {5, 2, {{Point{{1, 3}}, Direction{{0, 1}}}}},
      {7, 1, {{Point{{0, 0}}, Direction{{1, 1}}}, {Point{{2, 0}}, Direction{{0, 1}}},
              {Point{{0, 5}}, Direction{{1, 3}}}}},
      {4, 2, {{Point{{0, 1}}, Direction{{1, 1}}}}},
  };
  for (const auto& c : cases) {
    auto f = Field::make(c.q);
    std::vector<Point> pts;
    for (const auto& [a, b] : c.lines) {
      for (auto& p : line_points(*f, {a, b})) pts.push_back(p);
    }
    const KakeyaSet s(f, 2, pts);
    ASSERT_FALSE(verify(s).ok);
    const auto g = find_vanishing_poly(f, s.points(), 2, c.m);
    const auto d = g.degree();
    ASSERT_LT(d, static_cast<long>(c.m * c.q));
    const auto g0 = leading_homogeneous(g);
    for (const auto& [a, b] : c.lines) {
      const UniPoly r = restrict_to_line(g, {a, b});
      EXPECT_TRUE(r.is_zero());
      EXPECT_EQ(evaluate(g0, Point{b.coords}), 0u);
    }
    // A line meeting S in k points: root count with multiplicity >= m k
    // unless the restriction vanishes.
    for (const auto& b : canonical_directions(2, *f)) {
      const UniPoly r = restrict_to_line(g, {origin(2), b});
      if (r.is_zero()) continue;
      unsigned hits = 0;
      for (Rep t = 0; t < c.q; ++t) hits += s.contains(line_point(*f, origin(2), t, b));
      EXPECT_GE(count_roots_with_multiplicity(r), c.m * hits);
      EXPECT_LE(count_roots_with_multiplicity(r), static_cast<unsigned>(r.degree()));
    }
  }
}

}  // namespace
}  // namespace kakeya
