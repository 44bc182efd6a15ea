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

// Points, directions and lines of the affine space F_q^n.

#ifndef KAKEYA_SPACE_HPP_
#define KAKEYA_SPACE_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kakeya/gf.hpp"

namespace kakeya {

struct Point {
  std::vector<Rep> coords;

  std::size_t dim() const { return coords.size(); }
  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;
};

struct Direction {
  std::vector<Rep> coords;
  bool canonical = false;

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](Rep c) { return c == 0; });
  }
  // Ordering and equality ignore the flag.
  friend auto operator<=>(const Direction& a, const Direction& b) {
    return a.coords <=> b.coords;
  }
  friend bool operator==(const Direction& a, const Direction& b) {
    return a.coords == b.coords;
  }
};

struct LineSpec {
  Point base;
  Direction dir;
};

inline Point origin(std::size_t n) { return Point{std::vector<Rep>(n, 0)}; }

// a + t * b
inline Point line_point(const Field& f, const Point& a, Rep t,
                        const Direction& b) {
  Point out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = f.add(out.coords[i], f.mul(t, b.coords[i]));
  }
  return out;
}

inline Point translate(const Field& f, const Point& a, const Point& v) {
  Point out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = f.add(out.coords[i], v.coords[i]);
  }
  return out;
}

// Scales b so its first nonzero coordinate is 1.
inline Direction canonicalize(const Field& f, const Direction& b) {
  auto lead = std::find_if(b.coords.begin(), b.coords.end(),
                           [](Rep c) { return c != 0; });
  if (lead == b.coords.end()) {
    throw std::invalid_argument("space: zero vector has no direction");
  }
  const Rep scale = f.inv(*lead);
  Direction out{b.coords, true};
  for (auto& c : out.coords) c = f.mul(c, scale);
  return out;
}

inline Direction scale(const Field& f, const Direction& b, Rep lambda) {
  if (lambda == 0) throw std::invalid_argument("space: zero scale");
  Direction out{b.coords, false};
  for (auto& c : out.coords) c = f.mul(c, lambda);
  return out;
}

// (q^n - 1)/(q - 1) directions with leading coordinate 1, lexicographic.
inline std::vector<Direction> canonical_directions(std::size_t n,
                                                   const Field& f) {
  if (n < 1) throw std::invalid_argument("space: dimension must be >= 1");
  const Rep q = f.q();
  std::vector<Direction> out;
  // Leading 1 at position lead, zeros before it, anything after it.
  for (std::size_t lead = n; lead-- > 0;) {
    const std::size_t free = n - 1 - lead;
    std::vector<Rep> tail(free, 0);
    while (true) {
      Direction d{std::vector<Rep>(n, 0), true};
      d.coords[lead] = 1;
      std::copy(tail.begin(), tail.end(), d.coords.begin() + lead + 1);
      out.push_back(std::move(d));
      std::size_t i = free;
      while (i > 0 && tail[i - 1] == q - 1) tail[--i] = 0;
      if (i == 0) break;
      ++tail[i - 1];
    }
  }
  return out;
}

// Exactly q distinct points {a + t b}, sorted.
inline std::vector<Point> line_points(const Field& f, const LineSpec& line) {
  if (line.dir.is_zero()) {
    throw std::invalid_argument("space: line direction must be nonzero");
  }
  std::vector<Point> out;
  out.reserve(f.q());
  for (Rep t = 0; t < f.q(); ++t) out.push_back(line_point(f, line.base, t, line.dir));
  std::sort(out.begin(), out.end());
  return out;
}

// Dense index of a point: coordinates read as a base-q number with the
// first coordinate most significant, so index order is lexicographic order.
class PointIndexer {
 public:
  PointIndexer(std::uint32_t q, std::size_t n) : q_(q), n_(n), total_(1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (total_ > (std::uint64_t{1} << 40) / q) {
        throw std::invalid_argument("space: q^n too large to index");
      }
      total_ *= q;
    }
  }

  std::uint64_t size() const { return total_; }
  std::size_t dim() const { return n_; }

  std::uint64_t index(const Point& a) const {
    std::uint64_t idx = 0;
    for (Rep c : a.coords) idx = idx * q_ + c;
    return idx;
  }

  Point point(std::uint64_t idx) const {
    Point a{std::vector<Rep>(n_, 0)};
    for (std::size_t i = n_; i-- > 0;) {
      a.coords[i] = static_cast<Rep>(idx % q_);
      idx /= q_;
    }
    return a;
  }

 private:
  std::uint32_t q_;
  std::size_t n_;
  std::uint64_t total_;
};

inline void check_point(const Field& f, const Point& a, std::size_t n) {
  if (a.coords.size() != n) {
    throw std::invalid_argument("space: point has dimension " +
                                std::to_string(a.coords.size()) +
                                ", expected " + std::to_string(n));
  }
  for (Rep c : a.coords) {
    if (!f.contains(c)) {
      throw std::invalid_argument("space: coordinate " + std::to_string(c) +
                                  " not in F_" + std::to_string(f.q()));
    }
  }
}

}  // namespace kakeya

#endif  // KAKEYA_SPACE_HPP_
