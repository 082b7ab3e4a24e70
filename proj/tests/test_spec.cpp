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

#include "rtk/models.hpp"
#include "rtk/spec.hpp"

namespace rtk {
namespace {

class Omega4 : public ::testing::Test {
protected:
  StateSpace sp{{"a", "b", "c", "d"}};
  SpecMap id = SpecMap::identity(sp);
  SpecMap swap_ab = SpecMap::from_function(sp, sp, [](std::size_t i) { return i < 2 ? 1 - i : i; });
  SpecMap blur{sp, sp, {0b0011, 0b0011, 0b0100, 0b1000}};
  Specification s(std::initializer_list<const char*> names) {
    return make_spec(sp, std::vector<std::string>(names.begin(), names.end()));
  }
};

void expect_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST_F(Omega4, MakeSpec) {
  EXPECT_EQ(s({"a"}).mask(), 0b0001U);
  EXPECT_EQ(s({"a", "b", "a"}).mask(), 0b0011U);
  expect_kind(ErrorKind::EmptySpecification, [&] { make_spec(sp, {}); });
  expect_kind(ErrorKind::UnknownState, [&] { make_spec(sp, {"z"}); });
}

TEST(Space, RejectsDuplicatesAndEmpty) {
  expect_kind(ErrorKind::DuplicateState, [] { StateSpace({"a", "a"}); });
  expect_kind(ErrorKind::EmptySpecification, [] { StateSpace(std::vector<std::string>{}); });
  const StateSpace sp({"x", "y", "z"});
  for (std::size_t i = 0; i < sp.size(); ++i) EXPECT_EQ(sp.index(sp.label(i)), i);
}

TEST(Combine, Animals) {
  const StateSpace sp({"cheetah", "leopard", "jaguar", "puma", "lynx"});
  const auto v = make_spec(sp, {"cheetah", "leopard"});
  const auto w = make_spec(sp, {"jaguar", "leopard"});
  EXPECT_EQ(combine(v, w), make_spec(sp, {"leopard"}));
  EXPECT_EQ(combine(v, v), v);
  expect_kind(ErrorKind::Incompatible, [&] { combine(combine(v, w), make_spec(sp, {"puma", "lynx"})); });
}

TEST_F(Omega4, CombineAndForget) {
  expect_kind(ErrorKind::Incompatible, [&] { combine(s({"a"}), s({"b"})); });
  EXPECT_EQ(forget(s({"a"}), s({"b"})), s({"a", "b"}));
  EXPECT_EQ(forget(s({"c"}), s({"c"})), s({"c"}));
  EXPECT_EQ(forget(s({"a"}), Specification::full(sp)), Specification::full(sp));
}

TEST_F(Omega4, Apply) {
  EXPECT_EQ(apply(swap_ab, s({"a", "c"})), s({"b", "c"}));
  EXPECT_EQ(apply(id, s({"a", "d"})), s({"a", "d"}));
  EXPECT_EQ(apply(blur, s({"a"})), s({"a", "b"}));
}

TEST_F(Omega4, Compose) {
  EXPECT_EQ(compose(swap_ab, swap_ab), id);
  EXPECT_EQ(compose(blur, id), blur);
  EXPECT_EQ(compose(blur, swap_ab), blur);
  EXPECT_TRUE(maps_equal(id, id));
  EXPECT_FALSE(maps_equal(swap_ab, id));
  EXPECT_TRUE(maps_equal(compose(swap_ab, swap_ab), id));
}

TEST_F(Omega4, Inflating) {
  EXPECT_TRUE(is_inflating(blur));
  EXPECT_TRUE(is_inflating(id));
  EXPECT_FALSE(is_inflating(swap_ab));
}

TEST_F(Omega4, RejectsEmptyImage) {
  expect_kind(ErrorKind::EmptySpecification, [&] { SpecMap(sp, sp, {1, 0, 1, 1}); });
}

TEST(SpecLaws, HomomorphismAndIntersectionBound) {
  models::Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const StateSpace sp({"a", "b", "c", "d", "e", "f"});
    const SpecMap f = models::random_map(rng, sp);
    const StateMask v = models::random_spec(rng, sp).mask();
    const StateMask w = models::random_spec(rng, sp).mask();
    StateMask pieces = 0;
    for_each_bit(v | w, [&](std::size_t i) { pieces |= f.image(i); });
    EXPECT_EQ(f.apply_mask(v | w), f.apply_mask(v) | f.apply_mask(w));
    EXPECT_EQ(f.apply_mask(v | w), pieces);
    if ((v & w) != 0) {
      const StateMask lhs = f.apply_mask(v & w);
      EXPECT_EQ(lhs & ~(f.apply_mask(v) & f.apply_mask(w)), 0U);
    }
  }
}

TEST(SpecLaws, BandAndComposition) {
  models::Rng rng(11);
  const StateSpace sp({"a", "b", "c", "d"});
  for (int round = 0; round < 200; ++round) {
    const auto u = models::random_spec(rng, sp), v = models::random_spec(rng, sp), w = models::random_spec(rng, sp);
    EXPECT_EQ(forget(u, forget(v, w)), forget(forget(u, v), w));
    EXPECT_EQ(forget(u, v), forget(v, u));
    if ((u.mask() & v.mask() & w.mask()) != 0) {
      EXPECT_EQ(combine(u, combine(v, w)), combine(combine(u, v), w));
    }
    if ((u.mask() & v.mask()) != 0) {
      EXPECT_EQ(combine(u, v), combine(v, u));
    }
    const auto f = models::random_map(rng, sp), g = models::random_map(rng, sp), h = models::random_map(rng, sp);
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
    EXPECT_EQ(apply(compose(f, g), u), apply(f, apply(g, u)));
  }
}

TEST(AllMasks, Enumerates) {
  EXPECT_EQ(all_masks(3).size(), 7U);
  EXPECT_EQ(all_masks(3).front(), 1U);
  expect_kind(ErrorKind::TooLarge, [] { all_masks(25); });
}

TEST(Models, BitStrings) {
  const StateSpace sp = models::bit_strings(2);
  EXPECT_EQ(sp.labels(), (std::vector<std::string>{"00", "01", "10", "11"}));
  const auto b1 = models::bit_maps(2, 1);
  EXPECT_EQ(apply(b1[1], make_spec(sp, {"01"})), make_spec(sp, {"11"}));
  EXPECT_EQ(apply(b1[3], make_spec(sp, {"01"})), make_spec(sp, {"11"}));
  EXPECT_EQ(models::all_deterministic_maps(sp).size(), 256U);
  EXPECT_EQ(models::all_permutations(sp).size(), 24U);
  EXPECT_EQ(apply(models::exchange_bits(2, 1, 2), make_spec(sp, {"01"})), make_spec(sp, {"10"}));
}

} // namespace
} // namespace rtk
