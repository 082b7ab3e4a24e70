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

#include "rtk/approx.hpp"
#include "rtk/models.hpp"

namespace rtk {
namespace {

void expect_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

class Hamming : public ::testing::Test {
protected:
  ApproximationStructure s = models::hamming_structure(2);
  const StateSpace& sp() const { return s.space(); }
  Specification spec(std::initializer_list<const char*> names) const {
    return make_spec(sp(), std::vector<std::string>(names.begin(), names.end()));
  }
};

TEST_F(Hamming, Structure) {
  const auto r = verify_structure(s);
  EXPECT_TRUE(r.ok()) << r.report.format();
  EXPECT_TRUE(r.attainable);
  EXPECT_TRUE(check_triangle(s).ok());
}

TEST_F(Hamming, Approximate) {
  EXPECT_EQ(approximate(s, spec({"00"}), "1"), spec({"00", "01", "10"}));
  EXPECT_TRUE(approximate(s, spec({"01"}), "2").is_full());
  EXPECT_EQ(approximate(s, spec({"01", "10"}), "0"), spec({"01", "10"}));
  expect_kind(ErrorKind::UnknownIndex, [&] { approximate(s, spec({"00"}), "7"); });
}

TEST_F(Hamming, ApproximationSpace) {
  const auto a = approximation_space(s);
  ASSERT_EQ(a.size(), 9U);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a[i].count(), 1U);
  for (std::size_t i = 4; i < 8; ++i) EXPECT_EQ(a[i].count(), 3U);
  EXPECT_TRUE(a[8].is_full());
}

TEST_F(Hamming, Stability) {
  const auto iso = close_monoid(sp(), {models::bit_maps(2, 1)[1], models::bit_maps(2, 2)[1], models::exchange_bits(2, 1, 2)});
  EXPECT_TRUE(is_stable(ResourceTheory(iso), s).ok());
  EXPECT_TRUE(is_stable(ResourceTheory(close_monoid(sp(), {})), s).ok());
  const SpecMap jump = SpecMap::from_function(sp(), sp(), [](std::size_t i) { return i == 1 ? std::size_t{3} : i; });
  const auto r = is_stable(ResourceTheory(close_monoid(sp(), {jump})), s);
  EXPECT_FALSE(r.ok());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_FALSE(r.first_failure()->witness.empty());
}

TEST_F(Hamming, Robustness) {
  const ResourceTheory id(close_monoid(sp(), {}));
  EXPECT_TRUE(is_robust(id, s, spec({"00"}), 1));
  EXPECT_FALSE(is_robust(id, s, spec({"00"}), 2));
  const SpecMap to_01 = SpecMap::from_function(sp(), sp(), [](std::size_t) { return std::size_t{1}; });
  EXPECT_FALSE(is_robust(ResourceTheory(close_monoid(sp(), {to_01})), s, spec({"00"}), 1));
}

TEST_F(Hamming, Reduce) {
  const auto ins = insertion_from_lumping(models::prefix_lumping(2, 1));
  const auto red = reduce_structure(s, ins);
  EXPECT_TRUE(verify_structure(red).ok());
  EXPECT_TRUE(approximate(red, Specification::singleton(ins.small(), 0), "1").is_full());
  const auto same = reduce_structure(s, GaloisInsertion::identity(sp()));
  EXPECT_EQ(same.family(), s.family());
  const auto total = insertion_from_lumping(Lumping(SpecMap(sp(), sp(), {15, 15, 15, 15})));
  const auto flat = reduce_structure(s, total);
  EXPECT_EQ(flat.at(0), flat.at(2));
  EXPECT_TRUE(verify_structure(flat).ok());
  if (preserves_approximations(s, ins)) {
    EXPECT_TRUE(check_triangle(red).ok());
  }
}

TEST(Structure, Failures) {
  const StateSpace sp({"a", "b"});
  const ApproximationStructure flat(ApproxIndex::chain({"0", "1"}, true),
                                    {SpecMap::identity(sp), SpecMap::identity(sp)});
  const auto r = verify_structure(flat);
  EXPECT_FALSE(r.report.passed("saturating"));
  const ApproximationStructure only(ApproxIndex::chain({"top"}, false), {SpecMap(sp, sp, {3, 3})});
  const auto o = verify_structure(only);
  EXPECT_TRUE(o.ok());
  EXPECT_FALSE(o.attainable);
  expect_kind(ErrorKind::NoChainsDeclared, [&] { check_triangle(only); });
}

TEST(Structure, TriangleCounterexample) {
  const StateSpace sp({"a", "b", "c"});
  ApproxIndex ix = ApproxIndex::chain({"0", "1", "2", "3"}, true);
  ix.add_chain({"0", "1", "2", "3"}, {{"1", "1", "2"}, {"0", "1", "1"}, {"0", "0", "0"}});
  const SpecMap step(sp, sp, {0b011, 0b110, 0b100});
  const ApproximationStructure s(ix, {SpecMap::identity(sp), step, step, SpecMap(sp, sp, {7, 7, 7})});
  EXPECT_TRUE(verify_structure(s).ok());
  const auto r = check_triangle(s);
  EXPECT_FALSE(r.ok());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_FALSE(r.first_failure()->witness.empty());

  const StateSpace one({"x"});
  ApproxIndex z = ApproxIndex::chain({"0"}, true);
  z.add_chain({"0"}, {{"0", "0", "0"}});
  EXPECT_TRUE(check_triangle(ApproximationStructure(z, {SpecMap::identity(one)})).ok());
}

TEST_F(Hamming, IntersectionBound) {
  models::Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    const auto v = models::random_spec(rng, sp()), w = models::random_spec(rng, sp());
    if ((v.mask() & w.mask()) == 0) continue;
    for (std::size_t e = 0; e < 3; ++e) {
      const auto lhs = approximate(s, combine(v, w), e);
      EXPECT_TRUE(lhs.mask() == (lhs.mask() & approximate(s, v, e).mask() & approximate(s, w, e).mask()));
    }
  }
}

TEST_F(Hamming, RobustnessDescends) {
  const auto t = close_monoid(sp(), models::bit_maps(2, 1));
  const ResourceTheory big(t);
  const auto ins = insertion_from_lumping(models::prefix_lumping(2, 1));
  const auto small = restrict_theory(big, t, ins);
  const auto red = reduce_structure(s, ins);
  for (auto m : all_masks(4))
    for (std::size_t e = 0; e < 3; ++e) {
      const Specification v(sp(), m);
      if (!is_robust(big, s, v, e)) {
        EXPECT_FALSE(is_robust(small, red, apply(ins.h(), v), e)) << v.to_string() << " at " << e;
      }
    }
}

} // namespace
} // namespace rtk
