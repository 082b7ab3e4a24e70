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

#include "rtk/embed.hpp"
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

class Omega4 : public ::testing::Test {
protected:
  StateSpace sp{{"a", "b", "c", "d"}};
  SpecMap blur{sp, sp, {0b0011, 0b0011, 0b0100, 0b1000}};
  SpecMap merge_ab = SpecMap::from_function(sp, sp, [](std::size_t i) { return i == 1 ? 0 : i; });
  SpecMap const_c = SpecMap::from_function(sp, sp, [](std::size_t) { return std::size_t{2}; });
};

TEST_F(Omega4, VerifyLumping) {
  EXPECT_TRUE(verify_lumping(blur).ok());
  const auto r = verify_lumping(merge_ab);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.passed("inflating"));
  EXPECT_TRUE(verify_lumping(SpecMap::identity(sp)).ok());
  expect_kind(ErrorKind::NotLumping, [&] { Lumping{merge_ab}; });
  const StateSpace other({"x"});
  expect_kind(ErrorKind::NotEndomorphism, [&] { verify_lumping(SpecMap(sp, other, {1, 1, 1, 1})); });
}

TEST_F(Omega4, NonPartitionLumpingRejected) {
  const StateSpace two({"a", "b"});
  const Lumping l(SpecMap(two, two, {0b01, 0b11}));
  EXPECT_FALSE(l.is_partition());
  expect_kind(ErrorKind::NotPartitionLumping, [&] { insertion_from_lumping(l); });
}

TEST_F(Omega4, InsertionFromBlur) {
  const auto ins = insertion_from_lumping(Lumping(blur));
  EXPECT_EQ(ins.small().labels(), (std::vector<std::string>{"ab", "c", "d"}));
  EXPECT_EQ(ins.e().image(0), 0b0011U);
  EXPECT_EQ(ins.h().image(0), 0b001U);
  EXPECT_EQ(ins.lumping_map(), blur);
  EXPECT_TRUE(verify_insertion(ins).ok());
  const GaloisInsertion swapped(ins.h(), ins.e());
  EXPECT_FALSE(verify_insertion(swapped).ok());
  EXPECT_TRUE(verify_insertion(GaloisInsertion::identity(sp)).ok());
}

TEST(Insertion, IdentityAndFirstBit) {
  const StateSpace sp = models::bit_strings(2);
  const auto id = insertion_from_lumping(Lumping::identity(sp));
  EXPECT_EQ(id.small().size(), 4U);
  EXPECT_EQ(id.e().table(), SpecMap::identity(sp).table());
  const auto first = insertion_from_lumping(models::prefix_lumping(2, 1));
  ASSERT_EQ(first.small().size(), 2U);
  EXPECT_EQ(first.e().image(0), 0b0011U);
  EXPECT_EQ(first.e().image(1), 0b1100U);
}

TEST(Classify, Kinds) {
  const StateSpace ab({"a", "b"}), abc({"a", "b", "c"}), xyz({"x", "y", "z"});
  const auto inc = classify_embedding(SpecMap(ab, abc, {0b001, 0b010}));
  EXPECT_EQ(inc.kind, EmbeddingKind::Extensive);
  const StateSpace sp({"a", "b", "c", "d"});
  const auto ins = insertion_from_lumping(Lumping(SpecMap(sp, sp, {0b0011, 0b0011, 0b0100, 0b1000})));
  const auto blur = classify_embedding(ins.e());
  EXPECT_EQ(blur.kind, EmbeddingKind::Intensive);
  ASSERT_TRUE(blur.adjoint.has_value());
  EXPECT_EQ(*blur.adjoint, ins.h());
  EXPECT_EQ(classify_embedding(SpecMap(ab, xyz, {0b001, 0b110})).kind, EmbeddingKind::Intensive);
  EXPECT_EQ(classify_embedding(SpecMap(ab, xyz, {0b011, 0b100})).kind, EmbeddingKind::Intensive);
  const StateSpace pqr({"p", "q", "r", "s"});
  EXPECT_EQ(classify_embedding(SpecMap(ab, pqr, {0b0011, 0b0100})).kind, EmbeddingKind::General);
  expect_kind(ErrorKind::NotOrderEmbedding, [&] { classify_embedding(SpecMap(ab, xyz, {0b001, 0b011})); });
}

TEST(Decompose, FactorsMultiply) {
  const StateSpace ab({"a", "b"}), xyz({"x", "y", "z"});
  for (auto order : {FactorOrder::ExtensiveAfterIntensive, FactorOrder::IntensiveAfterExtensive}) {
    const SpecMap e(ab, xyz, {0b001, 0b110});
    const auto d = decompose_embedding(e, order);
    EXPECT_EQ(d.product(), e);
    EXPECT_EQ(classify_embedding(d.extensive).kind, EmbeddingKind::Extensive);
    const auto ik = classify_embedding(d.intensive).kind;
    EXPECT_TRUE(ik == EmbeddingKind::Intensive || ik == EmbeddingKind::Extensive);
  }
  const StateSpace pqrs({"p", "q", "r", "s"});
  const SpecMap g(ab, pqrs, {0b0011, 0b0100});
  const auto d = decompose_embedding(g);
  EXPECT_EQ(d.product(), g);
  EXPECT_EQ(d.middle.size(), 3U);
  EXPECT_EQ(classify_embedding(d.intensive).kind, EmbeddingKind::Intensive);
}

TEST(Decompose, RandomEmbeddings) {
  models::Rng rng(17);
  for (int round = 0; round < 100; ++round) {
    const SpecMap e = models::random_embedding(rng);
    for (auto order : {FactorOrder::ExtensiveAfterIntensive, FactorOrder::IntensiveAfterExtensive}) {
      const auto d = decompose_embedding(e, order);
      EXPECT_TRUE(maps_equal(d.product(), e));
      EXPECT_EQ(classify_embedding(d.extensive).kind, EmbeddingKind::Extensive);
      EXPECT_NE(classify_embedding(d.intensive).kind, EmbeddingKind::General);
    }
  }
}

TEST(Nest, MiddleMatchesFirstBit) {
  const auto to_a = insertion_from_lumping(models::prefix_lumping(3, 1));
  const auto to_ab = insertion_from_lumping(models::prefix_lumping(3, 2));
  const auto a_in_ab = nest_middle(to_a, to_ab);
  EXPECT_TRUE(verify_insertion(a_in_ab).ok());
  const auto round_trip = nest_compose(a_in_ab, to_ab);
  EXPECT_EQ(round_trip.e(), to_a.e());
  EXPECT_EQ(round_trip.h(), to_a.h());
  expect_kind(ErrorKind::LumpingOrderViolated, [&] { nest_middle(to_ab, to_a); });
  const auto with_id = nest_compose(GaloisInsertion::identity(to_a.small()), to_a);
  EXPECT_EQ(with_id.e(), to_a.e());
}

TEST(Nest, RejectsNonInsertion) {
  const StateSpace sp({"a", "b", "c", "d"}), big({"a", "b", "c", "d", "e"});
  const auto ins = insertion_from_lumping(Lumping(SpecMap(sp, sp, {0b0011, 0b0011, 0b0100, 0b1000})));
  const SpecMap inc(sp, big, {0b00001, 0b00010, 0b00100, 0b01000});
  const SpecMap back(big, sp, {0b0001, 0b0010, 0b0100, 0b1000, 0b1000});
  EXPECT_ANY_THROW(nest_compose(ins, GaloisInsertion(inc, back)));
}

TEST(Local, FirstBit) {
  const auto l = models::prefix_lumping(2, 1);
  const auto& sp = l.space();
  EXPECT_TRUE(is_local(l, make_spec(sp, {"00", "01"})));
  EXPECT_TRUE(is_local(l, Specification::full(sp)));
  EXPECT_FALSE(is_local(l, make_spec(sp, {"00"})));
}

class TwoBits : public ::testing::Test {
protected:
  StateSpace sp = models::bit_strings(2);
  ResourceTheory t{close_monoid(sp, models::all_deterministic_maps(sp))};
  TransformationMonoid bit1 = close_monoid(sp, models::bit_maps(2, 1));
  TransformationMonoid bit2 = close_monoid(sp, models::bit_maps(2, 2));
  GaloisInsertion forget2 = insertion_from_lumping(models::prefix_lumping(2, 1));
};

TEST_F(TwoBits, Restrict) {
  const auto r = restrict_theory(t, bit1, forget2);
  EXPECT_EQ(r.monoid().size(), 4U);
  EXPECT_EQ(restrict_theory(t, close_monoid(sp, {}), forget2).monoid().size(), 1U);
  EXPECT_EQ(restrict_theory(t, bit2, forget2).monoid().size(), 1U);
  const auto same = restrict_theory(t, bit1, GaloisInsertion::identity(sp));
  EXPECT_TRUE(same_elements(same.monoid(), bit1));
  const ResourceTheory small(bit1);
  expect_kind(ErrorKind::NotSubmonoid, [&] { restrict_theory(small, bit2, forget2); });
}

TEST_F(TwoBits, Effective) {
  const auto k = make_spec(sp, {"00", "11"});
  const auto eff = effective_theory(t, bit1, forget2, k);
  const auto& small = forget2.small();
  const SpecMap set0 = compose(forget2.h(), compose(models::bit_maps(2, 1)[2], forget2.e()));
  bool found = false;
  for (const auto& f : eff.monoid().elements())
    if (f.apply_mask(small.all()) == 0b01U) found = true;
  EXPECT_TRUE(found);
  EXPECT_EQ(set0.apply_mask(small.all()), 0b01U);
  const auto plain = effective_theory(t, bit1, forget2, Specification::full(sp));
  EXPECT_TRUE(same_elements(plain.monoid(), restrict_theory(t, bit1, forget2).monoid()));
  expect_kind(ErrorKind::IncompatibleSideResource,
              [&] { effective_theory(t, bit1, forget2, make_spec(sp, {"00", "01"})); });
}

TEST(FromMaps, Examples) {
  const StateSpace sp = models::bit_strings(2);
  const SpecMap first = SpecMap::from_function(sp, sp, [](std::size_t i) { return i & 2U; });
  EXPECT_EQ(lumping_from_maps(sp, {first}).lumping.map(), models::prefix_lumping(2, 1).map());
  EXPECT_EQ(lumping_from_maps(sp, {SpecMap::identity(sp)}).lumping.map(), SpecMap::identity(sp));
  const SpecMap constant = SpecMap::from_function(sp, sp, [](std::size_t) { return std::size_t{2}; });
  const auto total = lumping_from_maps(sp, {constant});
  for (auto m : total.lumping.map().table()) EXPECT_EQ(m, sp.all());
}

TEST(FromMaps, InterleavedKernelsNeedSeveralSquarings) {
  const StateSpace sp({"a", "b", "c", "d", "e", "f"});
  const SpecMap pairs = SpecMap::from_function(sp, sp, [](std::size_t i) { return i / 2 * 2; });
  const SpecMap shifted = SpecMap::from_function(
      sp, sp, [](std::size_t i) { return i == 0 || i == 5 ? i : (i - 1) / 2 * 2 + 1; });
  const auto g = lumping_from_maps(sp, {pairs, shifted});
  EXPECT_GT(g.iterations, 1U);
  for (auto m : g.lumping.map().table()) EXPECT_EQ(m, sp.all());
}

TEST(LumpingLaws, RandomPartitions) {
  models::Rng rng(23);
  for (int round = 0; round < 100; ++round) {
    const StateSpace sp({"a", "b", "c", "d", "e"});
    const Lumping l = models::random_partition_lumping(rng, sp);
    const auto ins = insertion_from_lumping(l);
    EXPECT_EQ(ins.lumping_map(), l.map());
    EXPECT_TRUE(verify_insertion(ins).ok());
    const auto& f = l.map();
    for (int k = 0; k < 10; ++k) {
      const StateMask v = models::random_spec(rng, sp).mask(), w = models::random_spec(rng, sp).mask();
      EXPECT_EQ(f.apply_mask(f.apply_mask(v) | f.apply_mask(w)), f.apply_mask(v | w));
      const StateMask both = f.apply_mask(v) & f.apply_mask(w);
      if ((v & w) != 0) {
        EXPECT_EQ(f.apply_mask(v & w) & ~both, 0U);
      }
      if (both != 0) {
        EXPECT_EQ(f.apply_mask(both), both);
      }
    }
  }
}

TEST(LumpingLaws, AdjunctionExhaustive) {
  models::Rng rng(29);
  for (int round = 0; round < 30; ++round) {
    const StateSpace sp({"a", "b", "c", "d", "e"});
    const auto ins = insertion_from_lumping(models::random_partition_lumping(rng, sp));
    const auto small = all_masks(ins.small().size());
    for (auto z : all_masks(sp.size()))
      for (auto v : small) {
        EXPECT_EQ((z & ~ins.e().apply_mask(v)) == 0, (ins.h().apply_mask(z) & ~v) == 0);
      }
    for (auto v : small)
      for (auto w : small)
        EXPECT_EQ((ins.e().apply_mask(v) & ~ins.e().apply_mask(w)) == 0, (v & ~w) == 0);
  }
}

} // namespace
} // namespace rtk
