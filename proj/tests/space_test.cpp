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

#include "kakeya/space.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace kakeya {
namespace {

Rep pick(std::mt19937& rng, std::uint64_t bound) {
  return static_cast<Rep>(rng() % bound);
}

std::vector<std::vector<Rep>> coords_of(const std::vector<Direction>& dirs) {
  std::vector<std::vector<Rep>> out;
  for (const auto& d : dirs) out.push_back(d.coords);
  return out;
}

TEST(CanonicalDirections, PlaneOverF2) {
  auto f = Field::make(2);
  EXPECT_EQ(coords_of(canonical_directions(2, *f)),
            (std::vector<std::vector<Rep>>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(CanonicalDirections, PlaneOverF3) {
  EXPECT_EQ(canonical_directions(2, *Field::make(3)).size(), 4u);
}

TEST(CanonicalDirections, LineHasOneDirection) {
  for (auto q : {2u, 5u, 9u}) {
    auto dirs = canonical_directions(1, *Field::make(q));
    ASSERT_EQ(dirs.size(), 1u);
    EXPECT_EQ(dirs[0].coords, std::vector<Rep>{1});
  }
}

// Oracle: orbits of nonzero vectors under scaling.
TEST(CanonicalDirections, MatchesScalingOrbits) {
  for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto f = Field::make(q);
    for (std::size_t n = 1; n <= 4; ++n) {
      const PointIndexer idx(q, n);
      if (idx.size() > 100000) continue;
      std::set<std::vector<Rep>> orbit_reps;
      for (std::uint64_t i = 1; i < idx.size(); ++i) {
        const Point v = idx.point(i);
        std::vector<Rep> least = v.coords;
        for (Rep lambda = 1; lambda < q; ++lambda) {
          std::vector<Rep> s = v.coords;
          for (auto& c : s) c = f->mul(c, lambda);
          least = std::min(least, s);
        }
        orbit_reps.insert(least);
      }
      const auto dirs = canonical_directions(n, *f);
      ASSERT_EQ(dirs.size(), orbit_reps.size());
      std::uint64_t expected = (idx.size() - 1) / (q - 1);
      EXPECT_EQ(dirs.size(), expected);
      EXPECT_TRUE(std::is_sorted(dirs.begin(), dirs.end()));
      for (const auto& d : dirs) {
        EXPECT_TRUE(d.canonical);
        EXPECT_EQ(canonicalize(*f, d).coords, d.coords);
      }
    }
  }
}

TEST(Canonicalize, ScalingInvariant) {
  auto f = Field::make(9);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Direction b{{pick(rng, 9), pick(rng, 9), pick(rng, 9)}};
    if (b.is_zero()) continue;
    for (Rep lambda = 1; lambda < 9; ++lambda) {
      EXPECT_EQ(canonicalize(*f, scale(*f, b, lambda)).coords, canonicalize(*f, b).coords);
    }
  }
  EXPECT_THROW(canonicalize(*f, Direction{{0, 0}}), std::invalid_argument);
}

TEST(LinePoints, Examples) {
  auto f3 = Field::make(3);
  EXPECT_EQ(line_points(*f3, {Point{{0, 0}}, Direction{{1, 0}}}),
            (std::vector<Point>{{{0, 0}}, {{1, 0}}, {{2, 0}}}));
  auto f2 = Field::make(2);
  EXPECT_EQ(line_points(*f2, {Point{{1, 1}}, Direction{{1, 1}}}),
            (std::vector<Point>{{{0, 0}}, {{1, 1}}}));
  EXPECT_THROW(line_points(*f2, {Point{{1, 1}}, Direction{{0, 0}}}), std::invalid_argument);
}

TEST(LinePoints, ReparametrizationInvariant) {
  std::mt19937 rng(11);
  for (auto q : {3u, 4u, 5u, 8u}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 50; ++trial) {
      Point a{{pick(rng, q), pick(rng, q), pick(rng, q)}};
      Direction b{{pick(rng, q), pick(rng, q), pick(rng, q)}};
      if (b.is_zero()) continue;
      const auto base = line_points(*f, {a, b});
      ASSERT_EQ(base.size(), q);
      ASSERT_EQ(std::set<Point>(base.begin(), base.end()).size(), q);
      const Rep t0 = pick(rng, q);
      const Rep lambda = 1 + pick(rng, q - 1);
      EXPECT_EQ(line_points(*f, {line_point(*f, a, t0, b), scale(*f, b, lambda)}), base);
    }
  }
}

TEST(PointIndexer, RoundTripAndOrder) {
  const PointIndexer idx(5, 3);
  EXPECT_EQ(idx.size(), 125u);
  Point prev = idx.point(0);
  for (std::uint64_t i = 0; i < idx.size(); ++i) {
    const Point a = idx.point(i);
    EXPECT_EQ(idx.index(a), i);
    if (i > 0) {
      EXPECT_LT(prev, a);
    }
    prev = a;
  }
}

}  // namespace
}  // namespace kakeya
