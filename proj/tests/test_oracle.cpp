/*
 *   Copyright 2026 The rtk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include "rtk/kernels.hpp"
#include "rtk/locality.hpp"
#include "rtk/models.hpp"
#include "rtk/oracle.hpp"

namespace rtk {
namespace {

TEST(Oracle, ReachesAgrees) {
  models::Rng rng(53);
  for (int round = 0; round < 100; ++round) {
    const auto t = models::random_theory(rng, 6, 40);
    for (int k = 0; k < 30; ++k) {
      const auto v = models::random_spec(rng, t.space()), w = models::random_spec(rng, t.space());
      const auto fast = reaches(t, v, w), slow = oracle::reaches(t, v, w);
      EXPECT_EQ(fast.found, slow.found);
      EXPECT_EQ(fast.index, slow.index);
    }
  }
}

TEST(Oracle, CommutantAgrees) {
  models::Rng rng(59);
  for (int round = 0; round < 60; ++round) {
    const auto t = models::random_theory(rng, 4, 40);
    const auto& m = t.monoid();
    std::vector<SpecMap> a;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (rng() % 4 == 0) a.push_back(m.element(i));
    EXPECT_EQ(commutant(subsystem_of(m, a)).members().indices(), oracle::commutant(m, a));
  }
}

TEST(Oracle, CommutantFullTwoBits) {
  const StateSpace sp = models::bit_strings(2);
  const auto m = close_monoid(sp, models::all_deterministic_maps(sp));
  const auto a = models::bit_maps(2, 1);
  const auto slow = oracle::commutant(m, a);
  EXPECT_EQ(commutant(subsystem_of(m, a)).members().indices(), slow);
  EXPECT_EQ(slow.size(), 4U);
}

TEST(Oracle, CommutationRowsSymmetric) {
  models::Rng rng(61);
  const auto t = models::random_theory(rng, 5, 60);
  const auto rows = kernels::commutation_rows(t.monoid().elements());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_TRUE(rows[i].contains(0));
    EXPECT_TRUE(rows[i].contains(i));
    for (auto j : rows[i].indices()) EXPECT_TRUE(rows[j].contains(i));
  }
}

TEST(Oracle, FirstFailureIsSmallest) {
  EXPECT_EQ(kernels::first_failure(1000, [](std::size_t i) { return i % 97 != 41 && i % 89 != 60; }), 41U);
  EXPECT_FALSE(kernels::first_failure(1000, [](std::size_t) { return true; }).has_value());
  EXPECT_GE(kernels::thread_count(), 1);
}

TEST(Oracle, HullSizeLimits) {
  const PointSpec cube({RationalPoint{0, 0, 0}, RationalPoint{1, 1, 1}});
  EXPECT_THROW(oracle::hull_contains(cube, RationalPoint{0, 0, 0}), Error);
  const StateSpace big({"a", "b", "c", "d", "e", "f", "g"});
  const ResourceTheory t(close_monoid(big, {}));
  EXPECT_THROW(oracle::reaches(t, Specification::full(big), Specification::full(big)), Error);
}

TEST(Oracle, HullCollinear) {
  const PointSpec pts({RationalPoint{0, 0}, RationalPoint{1, 1}, RationalPoint{2, 2}});
  EXPECT_TRUE(oracle::hull_contains(pts, RationalPoint{Rational(3, 2), Rational(3, 2)}));
  EXPECT_FALSE(oracle::hull_contains(pts, RationalPoint{1, 0}));
  EXPECT_EQ(hull_contains(pts, RationalPoint{1, 0}), false);
}

} // namespace
} // namespace rtk
