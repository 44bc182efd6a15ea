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

// Polynomial method machinery over F_q.
//
// MultiPoly stores sparse polynomials with every individual degree at most
// q - 1, keyed by graded-lex monomials. A polynomial g vanishes to order m at
// a when g(x + a) has no monomial of total degree below m; each such
// coefficient is a linear form in the coefficients of g:
//
//   coeff_f(g(x + a)) = sum_e g_e * prod_i C(e_i, f_i) a_i^(e_i - f_i).
//
// Stacking those forms for every point of S and every f with |f| < m gives
// the ConstraintSystem whose nullspace holds the vanishing polynomials.

#ifndef KAKEYA_POLYMETHOD_HPP_
#define KAKEYA_POLYMETHOD_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kakeya/bounds.hpp"
#include "kakeya/gf.hpp"
#include "kakeya/space.hpp"

namespace kakeya {

struct Monomial {
  std::vector<unsigned> exponents;

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  std::size_t dim() const { return exponents.size(); }

  // Graded lexicographic: total degree first, then exponents left to right.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }
};

// C(a, b) mod p by Lucas' theorem over base-p digits, with factorial tables
// of size p for the digit binomials.
class BinomialModP {
 public:
  explicit BinomialModP(std::uint32_t p) : p_(p), fact_(p), inv_fact_(p) {
    fact_[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i) {
      fact_[i] = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(fact_[i - 1]) * i % p);
    }
    inv_fact_[p - 1] = detail::inv_mod(fact_[p - 1], p);
    for (std::uint32_t i = p - 1; i > 0; --i) {
      inv_fact_[i - 1] = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(inv_fact_[i]) * i % p);
    }
  }

  std::uint32_t operator()(std::uint64_t a, std::uint64_t b) const {
    if (b > a) return 0;
    std::uint64_t r = 1;
    while (b > 0 || a > 0) {
      const std::uint64_t ad = a % p_, bd = b % p_;
      if (bd > ad) return 0;
      r = r * fact_[ad] % p_ * inv_fact_[bd] % p_ * inv_fact_[ad - bd] % p_;
      a /= p_;
      b /= p_;
    }
    return static_cast<std::uint32_t>(r);
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
class UniPoly {
 public:
  UniPoly(FieldPtr field, std::vector<Rep> coeffs = {})
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static UniPoly monomial(FieldPtr field, Rep c, std::size_t degree) {
    std::vector<Rep> v(degree + 1, 0);
    v[degree] = c;
    return UniPoly(std::move(field), std::move(v));
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<Rep>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rep coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Rep operator()(Rep t) const {
    const Field& f = *field_;
    Rep acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, t), coeffs_[i]);
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const Field& f = *a.field_;
    std::vector<Rep> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return UniPoly(a.field_, std::move(out));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    const Field& f = *a.field_;
    std::vector<Rep> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return UniPoly(a.field_, std::move(out));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    const Field& f = *a.field_;
    std::vector<Rep> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return UniPoly(a.field_, std::move(out));
  }

  // Quotient and remainder by (t - t0), via synthetic division.
  std::pair<UniPoly, Rep> divide_linear(Rep t0) const {
    const Field& f = *field_;
    if (coeffs_.empty()) return {UniPoly(field_), 0};
    std::vector<Rep> quot(coeffs_.size() - 1, 0);
    Rep carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rep v = f.add(coeffs_[i], f.mul(carry, t0));
      if (i == 0) return {UniPoly(field_, std::move(quot)), v};
      quot[i - 1] = v;
      carry = v;
    }
    return {UniPoly(field_, std::move(quot)), 0};
  }

  // Largest r with (t - t0)^r dividing this; max() for the zero polynomial.
  unsigned root_multiplicity(Rep t0) const {
    if (is_zero()) return std::numeric_limits<unsigned>::max();
    unsigned r = 0;
    UniPoly cur = *this;
    while (true) {
      auto [quot, rem] = cur.divide_linear(t0);
      if (rem != 0) return r;
      ++r;
      cur = std::move(quot);
    }
  }

  bool divisible_by_power(Rep t0, unsigned m) const {
    return root_multiplicity(t0) >= m;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  FieldPtr field_;
  std::vector<Rep> coeffs_;
};

// Root count of a nonzero univariate polynomial over F_q, with multiplicity.
inline unsigned count_roots_with_multiplicity(const UniPoly& g) {
  if (g.is_zero()) {
    throw std::invalid_argument("polymethod: zero polynomial has every root");
  }
  unsigned total = 0;
  for (Rep t = 0; t < g.field().q(); ++t) total += g.root_multiplicity(t);
  return total;
}

inline constexpr unsigned kInfiniteMultiplicity = std::numeric_limits<unsigned>::max();

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rep>;

  MultiPoly(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial.
  long degree() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.total_degree());
  }

  Rep coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
  }

  void set(const Monomial& mono, Rep c) {
    check_monomial(mono);
    if (!field_->contains(c)) {
      throw std::invalid_argument("polymethod: coefficient outside the field");
    }
    if (c == 0) {
      terms_.erase(mono);
    } else {
      terms_[mono] = c;
    }
  }

  void add_to(const Monomial& mono, Rep c) {
    if (!field_->contains(c)) {
      throw std::invalid_argument("polymethod: coefficient outside the field");
    }
    set(mono, field_->add(coeff(mono), c));
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out = a;
    for (const auto& [mono, c] : b.terms_) out.add_to(mono, c);
    return out;
  }

  MultiPoly scaled(Rep c) const {
    MultiPoly out(field_, n_);
    for (const auto& [mono, v] : terms_) out.set(mono, field_->mul(v, c));
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.field_->q() == b.field_->q() && a.terms_ == b.terms_;
  }

 private:
  void check_monomial(const Monomial& mono) const {
    if (mono.dim() != n_) {
      throw std::invalid_argument("polymethod: monomial has wrong dimension");
    }
    for (auto e : mono.exponents) {
      if (e > field_->q() - 1) {
        throw std::invalid_argument("polymethod: individual degree " + std::to_string(e) +
                                    " exceeds q - 1 = " + std::to_string(field_->q() - 1));
      }
    }
  }

  void check_compatible(const MultiPoly& other) const {
    if (n_ != other.n_ || field_->q() != other.field_->q()) {
      throw std::invalid_argument("polymethod: mismatched polynomials");
    }
  }

  FieldPtr field_;
  std::size_t n_;
  Terms terms_;
};

inline Rep evaluate(const MultiPoly& g, const Point& a) {
  const Field& f = g.field();
  check_point(f, a, g.dim());
  Rep acc = 0;
  for (const auto& [mono, c] : g.terms()) {
    Rep term = c;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
      term = f.mul(term, f.pow(a.coords[i], mono.exponents[i]));
    }
    acc = f.add(acc, term);
  }
  return acc;
}

// All exponent vectors with e_i <= q - 1 and |e| < m q, in graded-lex order.
inline std::vector<Monomial> monomial_basis(std::size_t n, const Field& f, unsigned m) {
  if (m < 1) throw std::invalid_argument("polymethod: m must be >= 1");
  const unsigned cap = f.q() - 1;
  const std::uint64_t limit = static_cast<std::uint64_t>(m) * f.q();
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    Monomial mono{e};
    if (mono.total_degree() < limit) out.push_back(std::move(mono));
    std::size_t i = n;
    while (i > 0 && e[i - 1] == cap) e[--i] = 0;
    if (i == 0) break;
    ++e[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Target monomials f with |f| < m, graded-lex. There are C(m+n-1, n) of
// them; when m > q some have f_i > q - 1 and yield all-zero rows.
inline std::vector<Monomial> low_degree_targets(std::size_t n, unsigned m) {
  std::vector<Monomial> out;
  if (m == 0) return out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    Monomial mono{e};
    if (mono.total_degree() < m) out.push_back(mono);
    std::size_t i = n;
    while (i > 0 && e[i - 1] == m - 1) e[--i] = 0;
    if (i == 0) break;
    ++e[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ConstraintRow {
  std::size_t point_index = 0;  // into the point set
  Monomial target;              // |target| < m
  std::vector<Rep> coeffs;      // one entry per basis column
};

struct ConstraintSystem {
  std::vector<Monomial> columns;
  std::vector<ConstraintRow> rows;
};

// Coefficient of x^target in the expansion of x^e shifted by a.
inline Rep shift_coefficient(const Field& f, const BinomialModP& binom, const Monomial& e,
                             const Monomial& target, const Point& a) {
  Rep v = 1;
  for (std::size_t i = 0; i < e.exponents.size(); ++i) {
    const unsigned ei = e.exponents[i], fi = target.exponents[i];
    if (fi > ei) return 0;
    const Rep c = f.from_int(binom(ei, fi));
    if (c == 0) return 0;
    v = f.mul(v, f.mul(c, f.pow(a.coords[i], ei - fi)));
    if (v == 0) return 0;
  }
  return v;
}

inline std::vector<ConstraintRow> shift_constraint_rows(const Field& f, const Point& a, unsigned m,
                                                        const std::vector<Monomial>& basis,
                                                        std::size_t point_index = 0) {
  const BinomialModP binom(f.p());
  std::vector<ConstraintRow> rows;
  for (auto& target : low_degree_targets(a.dim(), m)) {
    ConstraintRow row{point_index, target, std::vector<Rep>(basis.size(), 0)};
    for (std::size_t c = 0; c < basis.size(); ++c) {
      row.coeffs[c] = shift_coefficient(f, binom, basis[c], target, a);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ConstraintSystem build_constraint_system(const Field& f, const std::vector<Point>& points,
                                                std::size_t n, unsigned m) {
  ConstraintSystem sys;
  sys.columns = monomial_basis(n, f, m);
  for (std::size_t i = 0; i < points.size(); ++i) {
    check_point(f, points[i], n);
    auto rows = shift_constraint_rows(f, points[i], m, sys.columns, i);
    for (auto& r : rows) sys.rows.push_back(std::move(r));
  }
  return sys;
}

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row. Pivot is the first nonzero entry in column order.
inline std::vector<std::size_t> row_reduce(const Field& f, std::vector<std::vector<Rep>>& mat,
                                           std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < mat.size(); ++col) {
    std::size_t piv = rank;
    while (piv < mat.size() && mat[piv][col] == 0) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[rank], mat[piv]);
    const Rep inv = f.inv(mat[rank][col]);
    for (auto& v : mat[rank]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      const Rep factor = mat[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (mat[rank][c] != 0) mat[r][c] = f.sub(mat[r][c], f.mul(factor, mat[rank][c]));
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  mat.resize(rank);
  return pivots;
}

// Nonzero nullspace vector with the first free column set to 1 and the other
// free columns 0; nullopt when the matrix has full column rank.
inline std::optional<std::vector<Rep>> nullspace_vector(const Field& f,
                                                        std::vector<std::vector<Rep>> mat,
                                                        std::size_t cols) {
  const auto pivots = row_reduce(f, mat, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == cols) return std::nullopt;
  std::vector<Rep> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(mat[r][free_col]);
  return x;
}

class BoundNotSatisfied : public std::runtime_error {
 public:
  BoundNotSatisfied(BigInt lhs, BigInt rhs)
      : std::runtime_error(message(lhs, rhs)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  // C(m+n-1, n) |S| and N_q(n, m).
  const BigInt& constraints() const { return lhs_; }
  const BigInt& unknowns() const { return rhs_; }

 private:
  static std::string message(const BigInt& lhs, const BigInt& rhs) {
    std::ostringstream os;
    os << "bound not satisfied: C(m+n-1,n)*|S| = " << lhs << " is not < N_q(n,m) = " << rhs;
    return os.str();
  }

  BigInt lhs_, rhs_;
};

inline constexpr std::uint64_t kMaxSolverColumns = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxSolverEntries = std::uint64_t{1} << 28;

// Nonzero g with individual degrees <= q - 1, total degree < m q, vanishing
// to order m at every point of S. Throws BoundNotSatisfied when
// C(m+n-1, n) |S| >= N_q(n, m).
inline MultiPoly find_vanishing_poly(const FieldPtr& field, const std::vector<Point>& points,
                                     std::size_t n, unsigned m) {
  const Field& f = *field;
  if (m < 1) throw std::invalid_argument("polymethod: m must be >= 1");
  const BigInt unknowns = count_Nq(static_cast<unsigned>(n), f.q(), m);
  const BigInt per_point = binomial(static_cast<std::int64_t>(m) + n - 1, n);
  const BigInt constraints = per_point * points.size();
  if (constraints >= unknowns) throw BoundNotSatisfied(constraints, unknowns);
  if (unknowns > kMaxSolverColumns) {
    throw std::invalid_argument("polymethod: N_q(n,m) = " + unknowns.str() +
                                " columns exceeds the solver limit of 2^20");
  }
  if (unknowns * constraints > kMaxSolverEntries) {
    throw std::invalid_argument("polymethod: constraint matrix too large (" +
                                constraints.str() + " x " + unknowns.str() + ")");
  }

  ConstraintSystem sys = build_constraint_system(f, points, n, m);
  std::vector<std::vector<Rep>> mat;
  mat.reserve(sys.rows.size());
  for (auto& row : sys.rows) mat.push_back(std::move(row.coeffs));
  auto x = nullspace_vector(f, std::move(mat), sys.columns.size());
  if (!x) throw std::logic_error("polymethod: no nullspace despite fewer rows than columns");

  MultiPoly g(field, n);
  for (std::size_t c = 0; c < sys.columns.size(); ++c) g.set(sys.columns[c], (*x)[c]);
  return g;
}

// Full expansion of g(x + a).
inline MultiPoly shift(const MultiPoly& g, const Point& a) {
  const Field& f = g.field();
  check_point(f, a, g.dim());
  const BinomialModP binom(f.p());
  MultiPoly out(g.field_ptr(), g.dim());
  for (const auto& [mono, c] : g.terms()) {
    // every f <= e componentwise
    std::vector<unsigned> sub(g.dim(), 0);
    while (true) {
      Monomial target{sub};
      const Rep v = shift_coefficient(f, binom, mono, target, a);
      if (v != 0) out.add_to(target, f.mul(c, v));
      std::size_t i = g.dim();
      while (i > 0 && sub[i - 1] == mono.exponents[i - 1]) sub[--i] = 0;
      if (i == 0) break;
      ++sub[i - 1];
    }
  }
  return out;
}

// Order of vanishing of g at a; kInfiniteMultiplicity for g = 0.
inline unsigned multiplicity_at(const MultiPoly& g, const Point& a) {
  if (g.is_zero()) return kInfiniteMultiplicity;
  const MultiPoly shifted = shift(g, a);
  // lowest graded-lex monomial has the lowest total degree
  return shifted.terms().begin()->first.total_degree();
}

// t -> g(a + t b).
inline UniPoly restrict_to_line(const MultiPoly& g, const LineSpec& line) {
  const Field& f = g.field();
  check_point(f, line.base, g.dim());
  const FieldPtr& fp = g.field_ptr();
  const std::size_t n = g.dim();
  // powers[i][e] = (a_i + t b_i)^e
  std::vector<std::vector<UniPoly>> powers(n);
  unsigned max_e = 0;
  for (const auto& [mono, c] : g.terms()) {
    for (auto e : mono.exponents) max_e = std::max(max_e, e);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const UniPoly linear(fp, {line.base.coords[i], line.dir.coords[i]});
    powers[i].push_back(UniPoly(fp, {1}));
    for (unsigned e = 1; e <= max_e; ++e) powers[i].push_back(powers[i].back() * linear);
  }
  UniPoly out(fp);
  for (const auto& [mono, c] : g.terms()) {
    UniPoly term(fp, {c});
    for (std::size_t i = 0; i < n; ++i) {
      if (mono.exponents[i] > 0) term = term * powers[i][mono.exponents[i]];
    }
    out = out + term;
  }
  return out;
}

// Terms of g of top total degree.
inline MultiPoly leading_homogeneous(const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("polymethod: zero polynomial has no leading form");
  const unsigned d = static_cast<unsigned>(g.degree());
  MultiPoly out(g.field_ptr(), g.dim());
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
    if (it->first.total_degree() != d) break;
    out.set(it->first, it->second);
  }
  return out;
}

}  // namespace kakeya

#endif  // KAKEYA_POLYMETHOD_HPP_
