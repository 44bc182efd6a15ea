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

// Kakeya sets in F_q^n: explicit constructions of size about 2^-(n-1) q^n
// and an exhaustive verifier.
//
// Odd characteristic:
//   D_n = {(alpha, beta) : alpha_i + beta^2 is a square for every i}
//   K_n = D_n  u  F^(n-1) x {0}
// For b with b_n != 0 the line through ((b_i / 2 b_n)^2, ..., 0) lies in D_n
// since alpha_i + beta^2 = (b_i / 2 b_n + t b_n)^2.
//
// Characteristic 2:
//   E_n = {(alpha, beta) : alpha_i = gamma_i^2 + gamma_i beta for some gamma_i}
// For b_n != 0 take gamma_i = b_i / b_n and base ((b_i / b_n)^2, ..., 0).
// With beta = 0 every alpha is a square, so E_n already holds the slab.

#ifndef KAKEYA_KAKEYA_SET_HPP_
#define KAKEYA_KAKEYA_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kakeya/bounds.hpp"
#include "kakeya/gf.hpp"
#include "kakeya/parallel.hpp"
#include "kakeya/space.hpp"

namespace kakeya {

enum class Provenance {
  kOddConstruction,
  kEvenConstruction,
  kRecursive,
  kEvenStyleOdd,
  kCustom,
  kFullSpace,
};

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kOddConstruction: return "odd-construction";
    case Provenance::kEvenConstruction: return "even-construction";
    case Provenance::kRecursive: return "recursive";
    case Provenance::kEvenStyleOdd: return "even-style-odd";
    case Provenance::kCustom: return "custom";
    case Provenance::kFullSpace: return "full-space";
  }
  return "custom";
}

inline Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::kOddConstruction, Provenance::kEvenConstruction,
                 Provenance::kRecursive, Provenance::kEvenStyleOdd, Provenance::kCustom,
                 Provenance::kFullSpace}) {
    if (to_string(p) == s) return p;
  }
  throw std::invalid_argument("kakeya: unknown provenance '" + s + "'");
}

enum class Variant { kOdd, kEven, kRecursiveOdd, kEvenStyleOdd };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::kOdd: return "odd";
    case Variant::kEven: return "even";
    case Variant::kRecursiveOdd: return "recursive-odd";
    case Variant::kEvenStyleOdd: return "even-style-odd";
  }
  return "odd";
}

inline Variant variant_from_string(const std::string& s) {
  for (auto v : {Variant::kOdd, Variant::kEven, Variant::kRecursiveOdd, Variant::kEvenStyleOdd}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("kakeya: unknown variant '" + s + "'");
}

struct Witness {
  Direction dir;
  Point base;
};

class KakeyaSet {
 public:
  KakeyaSet(FieldPtr field, std::size_t n, std::vector<Point> points,
            Provenance provenance = Provenance::kCustom,
            std::optional<std::vector<Witness>> witnesses = std::nullopt)
      : field_(std::move(field)),
        n_(n),
        points_(std::move(points)),
        witnesses_(std::move(witnesses)),
        provenance_(provenance) {
    if (n_ < 1) throw std::invalid_argument("kakeya: dimension must be >= 1");
    for (const auto& a : points_) check_point(*field_, a, n_);
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Provenance provenance() const { return provenance_; }
  const std::optional<std::vector<Witness>>& witnesses() const { return witnesses_; }
  void set_witnesses(std::optional<std::vector<Witness>> w) { witnesses_ = std::move(w); }

  bool contains(const Point& a) const {
    return std::binary_search(points_.begin(), points_.end(), a);
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Point> points_;
  std::optional<std::vector<Witness>> witnesses_;
  Provenance provenance_;
};

// Dense membership bitmap over F_q^n.
class Membership {
 public:
  explicit Membership(const KakeyaSet& set)
      : indexer_(set.field().q(), set.dim()), bits_(indexer_.size(), 0) {
    for (const auto& a : set.points()) bits_[indexer_.index(a)] = 1;
  }
  bool contains(const Point& a) const { return bits_[indexer_.index(a)] != 0; }
  bool contains(std::uint64_t idx) const { return bits_[idx] != 0; }
  const PointIndexer& indexer() const { return indexer_; }

 private:
  PointIndexer indexer_;
  std::vector<std::uint8_t> bits_;
};

namespace detail {

inline void require_dim(std::size_t n) {
  if (n < 2) throw std::invalid_argument("kakeya: constructions need n >= 2");
}

inline void require_odd(const Field& f) {
  if (f.characteristic_two()) {
    throw std::invalid_argument("kakeya: construction needs odd characteristic");
  }
}

// Admissible first-coordinate values for each beta, indexed by beta.
using AdmissibleTable = std::vector<std::vector<Rep>>;

// {alpha : alpha + beta^2 is a square} = squares - beta^2.
inline AdmissibleTable shifted_squares(const Field& f) {
  std::vector<char> is_sq(f.q(), 0);
  for (Rep a = 0; a < f.q(); ++a) is_sq[a] = f.is_square(a) ? 1 : 0;
  AdmissibleTable table(f.q());
  for (Rep beta = 0; beta < f.q(); ++beta) {
    const Rep b2 = f.square(beta);
    for (Rep alpha = 0; alpha < f.q(); ++alpha) {
      if (is_sq[f.add(alpha, b2)]) table[beta].push_back(alpha);
    }
  }
  return table;
}

// {gamma^2 + beta gamma : gamma in F}, any characteristic.
inline AdmissibleTable quadratic_images(const Field& f) {
  AdmissibleTable table(f.q());
  std::vector<char> hit(f.q());
  for (Rep beta = 0; beta < f.q(); ++beta) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Rep g = 0; g < f.q(); ++g) hit[f.add(f.square(g), f.mul(beta, g))] = 1;
    for (Rep a = 0; a < f.q(); ++a) {
      if (hit[a]) table[beta].push_back(a);
    }
  }
  return table;
}

// Points (alpha_1..alpha_{n-1}, beta) with each alpha_i in table[beta], for
// the betas accepted by keep.
template <typename Keep>
void append_fibres(const AdmissibleTable& table, std::size_t n, Keep keep,
                   std::vector<Point>& out) {
  for (Rep beta = 0; beta < table.size(); ++beta) {
    if (!keep(beta)) continue;
    const auto& allowed = table[beta];
    if (allowed.empty()) continue;
    std::vector<std::size_t> pos(n - 1, 0);
    while (true) {
      Point a{std::vector<Rep>(n, 0)};
      for (std::size_t i = 0; i + 1 < n; ++i) a.coords[i] = allowed[pos[i]];
      a.coords[n - 1] = beta;
      out.push_back(std::move(a));
      std::size_t i = n - 1;
      while (i > 0 && pos[i - 1] + 1 == allowed.size()) pos[--i] = 0;
      if (i == 0) break;
      ++pos[i - 1];
    }
  }
}

inline void append_slab(const Field& f, std::size_t n, std::vector<Point>& out) {
  const PointIndexer sub(f.q(), n - 1);
  for (std::uint64_t i = 0; i < sub.size(); ++i) {
    Point a = sub.point(i);
    a.coords.push_back(0);
    out.push_back(std::move(a));
  }
}

// Base points for the b_n != 0 directions: ((b_i / (c b_n))^2, ..., 0).
inline Point quadratic_base(const Field& f, const Direction& b, Rep c) {
  const std::size_t n = b.dim();
  const Rep denom_inv = f.inv(f.mul(c, b.coords[n - 1]));
  Point a = origin(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a.coords[i] = f.square(f.mul(b.coords[i], denom_inv));
  return a;
}

inline std::vector<Witness> quadratic_witnesses(const Field& f, std::size_t n, Rep c) {
  std::vector<Witness> out;
  for (auto& b : canonical_directions(n, f)) {
    Point base = b.coords[n - 1] != 0 ? quadratic_base(f, b, c) : origin(n);
    out.push_back({std::move(b), std::move(base)});
  }
  return out;
}

}  // namespace detail

// D_n alone (no slab). Not Kakeya: horizontal directions are missing.
inline std::vector<Point> odd_core_points(const Field& f, std::size_t n) {
  detail::require_odd(f);
  detail::require_dim(n);
  std::vector<Point> pts;
  detail::append_fibres(detail::shifted_squares(f), n, [](Rep) { return true; }, pts);
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline KakeyaSet construct_odd(const FieldPtr& field, std::size_t n) {
  const Field& f = *field;
  detail::require_odd(f);
  detail::require_dim(n);
  std::vector<Point> pts;
  detail::append_fibres(detail::shifted_squares(f), n, [](Rep beta) { return beta != 0; }, pts);
  detail::append_slab(f, n, pts);
  // 1/2 exists since the characteristic is odd.
  return KakeyaSet(field, n, std::move(pts), Provenance::kOddConstruction,
                   detail::quadratic_witnesses(f, n, f.from_int(2)));
}

inline KakeyaSet construct_even(const FieldPtr& field, std::size_t n) {
  const Field& f = *field;
  if (!f.characteristic_two()) {
    throw std::invalid_argument("kakeya: even construction needs characteristic 2");
  }
  detail::require_dim(n);
  std::vector<Point> pts;
  detail::append_fibres(detail::quadratic_images(f), n, [](Rep) { return true; }, pts);
  return KakeyaSet(field, n, std::move(pts), Provenance::kEvenConstruction,
                   detail::quadratic_witnesses(f, n, 1));
}

// E_n u F^(n-1) x {0} over an odd-characteristic field.
inline KakeyaSet construct_even_style_odd(const FieldPtr& field, std::size_t n) {
  const Field& f = *field;
  detail::require_odd(f);
  detail::require_dim(n);
  std::vector<Point> pts;
  detail::append_fibres(detail::quadratic_images(f), n, [](Rep beta) { return beta != 0; }, pts);
  detail::append_slab(f, n, pts);
  return KakeyaSet(field, n, std::move(pts), Provenance::kEvenStyleOdd,
                   detail::quadratic_witnesses(f, n, 1));
}

// K_1 = F, K_n = D_n u K_{n-1} x {0}.
inline KakeyaSet construct_recursive_odd(const FieldPtr& field, std::size_t n) {
  const Field& f = *field;
  detail::require_odd(f);
  detail::require_dim(n);

  std::vector<Point> layer;
  for (Rep t = 0; t < f.q(); ++t) layer.push_back(Point{{t}});
  std::map<std::vector<Rep>, Point> bases{{{1}, Point{{0}}}};
  const auto squares = detail::shifted_squares(f);
  const Rep two = f.from_int(2);

  for (std::size_t dim = 2; dim <= n; ++dim) {
    std::vector<Point> next;
    // Full D_dim: the witness lines for b_dim != 0 start in its beta = 0 fibre.
    detail::append_fibres(squares, dim, [](Rep) { return true; }, next);
    for (auto& a : layer) {
      a.coords.push_back(0);
      next.push_back(std::move(a));
    }
    std::map<std::vector<Rep>, Point> next_bases;
    for (auto& b : canonical_directions(dim, f)) {
      Point base;
      if (b.coords[dim - 1] != 0) {
        base = detail::quadratic_base(f, b, two);
      } else {
        std::vector<Rep> head(b.coords.begin(), b.coords.end() - 1);
        base = bases.at(head);
        base.coords.push_back(0);
      }
      next_bases.emplace(b.coords, std::move(base));
    }
    layer = std::move(next);
    bases = std::move(next_bases);
  }

  std::vector<Witness> witnesses;
  for (auto& b : canonical_directions(n, f)) {
    Point base = bases.at(b.coords);
    witnesses.push_back({std::move(b), std::move(base)});
  }
  return KakeyaSet(field, n, std::move(layer), Provenance::kRecursive, std::move(witnesses));
}

inline KakeyaSet construct_full_space(const FieldPtr& field, std::size_t n) {
  const PointIndexer idx(field->q(), n);
  std::vector<Point> pts;
  for (std::uint64_t i = 0; i < idx.size(); ++i) pts.push_back(idx.point(i));
  std::vector<Witness> witnesses;
  for (auto& b : canonical_directions(n, *field)) witnesses.push_back({std::move(b), origin(n)});
  return KakeyaSet(field, n, std::move(pts), Provenance::kFullSpace, std::move(witnesses));
}

inline KakeyaSet construct(const FieldPtr& field, std::size_t n, Variant variant) {
  switch (variant) {
    case Variant::kOdd: return construct_odd(field, n);
    case Variant::kEven: return construct_even(field, n);
    case Variant::kRecursiveOdd: return construct_recursive_odd(field, n);
    case Variant::kEvenStyleOdd: return construct_even_style_odd(field, n);
  }
  throw std::invalid_argument("kakeya: unknown variant");
}

inline KakeyaSet construct_variant(const FieldPtr& field, std::size_t n, Variant variant) {
  if (variant != Variant::kRecursiveOdd && variant != Variant::kEvenStyleOdd) {
    throw std::invalid_argument("kakeya: construct_variant takes recursive-odd or even-style-odd");
  }
  return construct(field, n, variant);
}

inline bool variant_supported(const Field& f, Variant variant) {
  return (variant == Variant::kEven) == f.characteristic_two();
}

inline KakeyaSet translate(const KakeyaSet& set, const Point& v) {
  const Field& f = set.field();
  check_point(f, v, set.dim());
  std::vector<Point> pts;
  pts.reserve(set.size());
  for (const auto& a : set.points()) pts.push_back(kakeya::translate(f, a, v));
  std::optional<std::vector<Witness>> witnesses;
  if (set.witnesses()) {
    witnesses.emplace();
    for (const auto& w : *set.witnesses()) {
      witnesses->push_back({w.dir, kakeya::translate(f, w.base, v)});
    }
  }
  return KakeyaSet(set.field_ptr(), set.dim(), std::move(pts), Provenance::kCustom,
                   std::move(witnesses));
}

struct VerifyResult {
  bool ok = false;
  std::vector<Witness> witnesses;       // one per canonical direction when ok
  std::optional<Direction> failing;     // first failing direction otherwise
};

namespace detail {

inline bool line_inside(const Field& f, const Membership& mem, const Point& a,
                        const Direction& b) {
  for (Rep t = 0; t < f.q(); ++t) {
    if (!mem.contains(line_point(f, a, t, b))) return false;
  }
  return true;
}

}  // namespace detail

// Exhaustive check over the canonical directions. For each direction the
// candidate bases are the set's own points in sorted order (a line inside K
// contains its base at t = 0); lines already walked are skipped, so each
// direction costs at most q^n point visits. The zero direction is accepted
// whenever K is nonempty, which every passing set is.
inline VerifyResult verify(const KakeyaSet& set, unsigned threads = 1) {
  const Field& f = set.field();
  const std::size_t n = set.dim();
  const Membership mem(set);
  const auto dirs = canonical_directions(n, f);
  const std::uint64_t total = mem.indexer().size();

  std::vector<std::optional<Point>> found(dirs.size());
  threads = std::max(1u, threads);
  std::vector<std::vector<std::uint32_t>> stamps(threads);

  parallel_for(dirs.size(), threads, [&](unsigned worker, std::size_t d) {
    auto& stamp = stamps[worker];
    if (stamp.empty()) stamp.assign(total, 0);
    const auto mark = static_cast<std::uint32_t>(d + 1);
    const Direction& b = dirs[d];
    for (const auto& a : set.points()) {
      if (stamp[mem.indexer().index(a)] == mark) continue;
      bool full = true;
      for (Rep t = 0; t < f.q(); ++t) {
        const auto idx = mem.indexer().index(line_point(f, a, t, b));
        stamp[idx] = mark;
        if (!mem.contains(idx)) full = false;
      }
      if (full) {
        found[d] = a;
        return;
      }
    }
  });

  VerifyResult result;
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    if (!found[d]) {
      result.failing = dirs[d];
      result.witnesses.clear();
      return result;
    }
    result.witnesses.push_back({dirs[d], *found[d]});
  }
  result.ok = true;
  return result;
}

// Checks the stored witness lines without searching. Fails on the first
// canonical direction that has no stored witness or whose line leaves K.
inline VerifyResult verify_stored_witnesses(const KakeyaSet& set) {
  VerifyResult result;
  const Field& f = set.field();
  const std::size_t n = set.dim();
  std::map<std::vector<Rep>, const Witness*> by_dir;
  if (set.witnesses()) {
    for (const auto& w : *set.witnesses()) {
      if (w.dir.is_zero()) continue;
      by_dir.emplace(canonicalize(f, w.dir).coords, &w);
    }
  }
  const Membership mem(set);
  for (auto& b : canonical_directions(n, f)) {
    auto it = by_dir.find(b.coords);
    if (it == by_dir.end() || it->second->base.dim() != n ||
        !detail::line_inside(f, mem, it->second->base, it->second->dir)) {
      result.failing = b;
      result.witnesses.clear();
      return result;
    }
    result.witnesses.push_back({b, it->second->base});
  }
  result.ok = true;
  return result;
}

// Exact size of a construction, computed from per-fibre admissible counts
// (no q^n enumeration), with its split into 2^-(n-1) q^n and a remainder.
struct SizeReport {
  Variant variant = Variant::kOdd;
  std::uint32_t q = 0;
  std::size_t n = 0;
  BigInt exact;
  BigInt core;          // |D_n| for odd-characteristic variants, |E_n| for even
  Rational leading;     // q^n / 2^(n-1)
  Rational remainder;   // exact - leading
  Rational constant;    // remainder / q^(n-1)
};

inline SizeReport upper_bound_size(const FieldPtr& field, std::size_t n, Variant variant) {
  const Field& f = *field;
  detail::require_dim(n);
  if (!variant_supported(f, variant)) {
    throw std::invalid_argument("kakeya: variant " + to_string(variant) +
                                " does not apply to characteristic " + std::to_string(f.p()));
  }
  const BigInt q = f.q();
  const auto fibre_sum = [&](const detail::AdmissibleTable& table, std::size_t dim,
                             bool skip_zero) {
    BigInt total = 0;
    for (Rep beta = 0; beta < f.q(); ++beta) {
      if (skip_zero && beta == 0) continue;
      total += ipow(BigInt(table[beta].size()), static_cast<unsigned>(dim - 1));
    }
    return total;
  };
  const BigInt slab = ipow(q, static_cast<unsigned>(n - 1));

  SizeReport r;
  r.variant = variant;
  r.q = f.q();
  r.n = n;
  switch (variant) {
    case Variant::kOdd: {
      const auto table = detail::shifted_squares(f);
      r.core = fibre_sum(table, n, false);
      r.exact = fibre_sum(table, n, true) + slab;
      break;
    }
    case Variant::kRecursiveOdd: {
      // |K_d| = |D_d| + |K_{d-1}| - |K_{d-1} n S^{d-1}|, S the squares. The
      // square points of K_m are S^(m-1) x {0} plus, for each nonzero square
      // beta, the alphas in S with alpha + beta^2 in S.
      const auto table = detail::shifted_squares(f);
      std::vector<char> is_sq(f.q(), 0);
      for (Rep a = 0; a < f.q(); ++a) is_sq[a] = f.is_square(a) ? 1 : 0;
      std::vector<BigInt> both;  // one entry per nonzero square beta
      for (Rep beta = 1; beta < f.q(); ++beta) {
        if (!is_sq[beta]) continue;
        std::size_t c = 0;
        for (Rep a : table[beta]) c += is_sq[a];
        both.push_back(c);
      }
      const BigInt h = (f.q() + 1) / 2;
      const auto square_points = [&](std::size_t m) -> BigInt {
        if (m == 1) return h;
        BigInt total = ipow(h, static_cast<unsigned>(m - 1));
        for (const auto& c : both) total += ipow(c, static_cast<unsigned>(m - 1));
        return total;
      };
      r.core = fibre_sum(table, n, false);
      BigInt size = q;  // K_1 = F
      for (std::size_t dim = 2; dim <= n; ++dim) {
        size = fibre_sum(table, dim, false) + size - square_points(dim - 1);
      }
      r.exact = size;
      break;
    }
    case Variant::kEven: {
      const auto table = detail::quadratic_images(f);
      r.core = fibre_sum(table, n, false);
      r.exact = r.core;
      break;
    }
    case Variant::kEvenStyleOdd: {
      const auto table = detail::quadratic_images(f);
      r.core = fibre_sum(table, n, false);
      r.exact = fibre_sum(table, n, true) + slab;
      break;
    }
  }
  r.leading = Rational(ipow(q, static_cast<unsigned>(n)), ipow(BigInt(2), static_cast<unsigned>(n - 1)));
  r.remainder = Rational(r.exact) - r.leading;
  r.constant = r.remainder / Rational(slab);
  return r;
}

}  // namespace kakeya

#endif  // KAKEYA_KAKEYA_SET_HPP_
