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

// Exact minimum Kakeya sets in the plane F_q^2, q <= 9.
//
// Every Kakeya set contains one full line per direction, and the union of
// those lines is Kakeya by itself, so a minimum Kakeya set is a union of
// q + 1 lines with pairwise distinct directions. The search picks one of the
// q parallel lines per canonical direction.
//
// Translations preserve size and the Kakeya property. Any selection can be
// moved so that its first line passes through the origin, and then slid
// along that line until the second line also passes through the origin;
// the search therefore fixes both of those lines.
//
// Pruning: line j (0-based) meets each of the j earlier lines in at most one
// point, so it adds at least q - j new points. The union of the remaining
// lines is therefore at least the current union plus sum_{j>=depth} (q - j).

#ifndef KAKEYA_SEARCH_HPP_
#define KAKEYA_SEARCH_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kakeya/gf.hpp"
#include "kakeya/kakeya_set.hpp"
#include "kakeya/space.hpp"

namespace kakeya {

// 128-bit point mask, enough for q^2 <= 81.
struct PlaneMask {
  std::uint64_t lo = 0, hi = 0;

  void set(unsigned i) {
    if (i < 64) {
      lo |= std::uint64_t{1} << i;
    } else {
      hi |= std::uint64_t{1} << (i - 64);
    }
  }
  bool test(unsigned i) const {
    return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
  }
  unsigned count() const { return std::popcount(lo) + std::popcount(hi); }
  friend PlaneMask operator|(PlaneMask a, PlaneMask b) { return {a.lo | b.lo, a.hi | b.hi}; }
};

// The q parallel lines of each canonical direction, each given by its
// smallest point (the shift representative), in increasing order.
struct PlaneLines {
  std::vector<Direction> directions;
  std::vector<std::vector<Point>> bases;       // [direction][choice]
  std::vector<std::vector<PlaneMask>> masks;   // [direction][choice]
};

inline PlaneLines plane_lines(const Field& f) {
  PlaneLines out;
  const PointIndexer idx(f.q(), 2);
  out.directions = canonical_directions(2, f);
  for (const auto& b : out.directions) {
    std::vector<char> seen(idx.size(), 0);
    std::vector<Point> bases;
    std::vector<PlaneMask> masks;
    for (std::uint64_t i = 0; i < idx.size(); ++i) {
      if (seen[i]) continue;
      const Point a = idx.point(i);
      PlaneMask m;
      for (Rep t = 0; t < f.q(); ++t) {
        const auto j = idx.index(line_point(f, a, t, b));
        seen[j] = 1;
        m.set(static_cast<unsigned>(j));
      }
      bases.push_back(a);
      masks.push_back(m);
    }
    out.bases.push_back(std::move(bases));
    out.masks.push_back(std::move(masks));
  }
  return out;
}

inline KakeyaSet union_of_lines(const FieldPtr& field, const PlaneLines& lines,
                                const std::vector<std::size_t>& choice) {
  const PointIndexer idx(field->q(), 2);
  PlaneMask all;
  std::vector<Witness> witnesses;
  for (std::size_t d = 0; d < choice.size(); ++d) {
    all = all | lines.masks[d][choice[d]];
    witnesses.push_back({lines.directions[d], lines.bases[d][choice[d]]});
  }
  std::vector<Point> pts;
  for (std::uint64_t i = 0; i < idx.size(); ++i) {
    if (all.test(static_cast<unsigned>(i))) pts.push_back(idx.point(i));
  }
  return KakeyaSet(field, 2, std::move(pts), Provenance::kCustom, std::move(witnesses));
}

struct SearchResult {
  std::size_t size = 0;
  KakeyaSet witness;
  std::uint64_t nodes = 0;  // search tree nodes visited
};

namespace detail {

class PlaneSearch {
 public:
  PlaneSearch(const Field& f, const PlaneLines& lines)
      : q_(f.q()), lines_(lines), choice_(lines.directions.size(), 0) {
    const std::size_t d = lines.directions.size();
    tail_.assign(d + 1, 0);
    for (std::size_t j = d; j-- > 0;) {
      tail_[j] = tail_[j + 1] + (q_ > j ? q_ - static_cast<unsigned>(j) : 0);
    }
    // Any full selection is an upper bound; +1 lets the first leaf win.
    best_ = static_cast<unsigned>(q_ * q_) + 1;
  }

  void run() {
    // Lines through the origin are choice 0 for every direction.
    PlaneMask start = lines_.masks[0][0];
    choice_[0] = 0;
    if (lines_.directions.size() > 1) {
      start = start | lines_.masks[1][0];
      choice_[1] = 0;
      dfs(2, start);
    } else {
      dfs(1, start);
    }
  }

  unsigned best() const { return best_; }
  const std::vector<std::size_t>& best_choice() const { return best_choice_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(std::size_t depth, PlaneMask cur) {
    ++nodes_;
    const unsigned size = cur.count();
    if (depth == lines_.directions.size()) {
      if (size < best_) {
        best_ = size;
        best_choice_ = choice_;
      }
      return;
    }
    if (size + tail_[depth] >= best_) return;
    for (std::size_t c = 0; c < lines_.masks[depth].size(); ++c) {
      choice_[depth] = c;
      dfs(depth + 1, cur | lines_.masks[depth][c]);
    }
  }

  unsigned q_;
  const PlaneLines& lines_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> best_choice_;
  std::vector<unsigned> tail_;
  unsigned best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline constexpr std::uint32_t kMaxSearchOrder = 9;

// Depth-first over directions in canonical order, choices in shift order;
// strict improvement keeps the first minimum found, so the witness is the
// least selection in that order among normalized ones.
inline SearchResult min_kakeya(const FieldPtr& field, std::size_t n = 2) {
  if (n != 2) {
    throw std::invalid_argument("search: exact search supports n = 2 only (got n = " +
                                std::to_string(n) + ")");
  }
  if (field->q() > kMaxSearchOrder) {
    throw std::invalid_argument("search: exact search supports q <= 9 (got q = " +
                                std::to_string(field->q()) + ")");
  }
  const PlaneLines lines = plane_lines(*field);
  detail::PlaneSearch search(*field, lines);
  search.run();
  return SearchResult{search.best(), union_of_lines(field, lines, search.best_choice()),
                      search.nodes()};
}

}  // namespace kakeya

#endif  // KAKEYA_SEARCH_HPP_
