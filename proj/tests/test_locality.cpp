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

#include <algorithm>
#include <random>

#include "rtk/locality.hpp"
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

class FullTwoBits : public ::testing::Test {
protected:
  static void SetUpTestSuite() {
    const StateSpace sp = models::bit_strings(2);
    auto gens = models::bit_maps(2, 1);
    for (const auto& f : models::bit_maps(2, 2)) gens.push_back(f);
    for (const auto& f : models::all_deterministic_maps(sp)) gens.push_back(f);
    full_ = new TransformationMonoid(close_monoid(sp, gens));
  }
  static void TearDownTestSuite() {
    delete full_;
    full_ = nullptr;
  }
  static TransformationMonoid* full_;
  const TransformationMonoid& t() const { return *full_; }
  const StateSpace& sp() const { return full_->space(); }
  Subsystem bit(std::size_t k) const { return subsystem_of(t(), models::bit_maps(2, k)); }
  GaloisInsertion keep(std::size_t k) const {
    return insertion_from_lumping(generated_lumping(bit(3 - k)).lumping);
  }
};
TransformationMonoid* FullTwoBits::full_ = nullptr;

TEST_F(FullTwoBits, Commutant) {
  EXPECT_EQ(t().size(), 256U);
  const auto id = subsystem_of(t(), {SpecMap::identity(sp())});
  EXPECT_EQ(commutant(id), whole(t()));
  EXPECT_EQ(commutant(bit(1)), bit(2));
  EXPECT_EQ(commutant(whole(t())), centre(whole(t())));
  EXPECT_EQ(centre(whole(t())).size(), 1U);
}

TEST_F(FullTwoBits, Bicommutant) {
  EXPECT_EQ(bicommutant(bit(1)), bit(1));
  EXPECT_TRUE(is_complete(bit(1)));
  const auto id = subsystem_of(t(), {SpecMap::identity(sp())});
  EXPECT_EQ(bicommutant(id), centre(whole(t())));
  EXPECT_EQ(bicommutant(bicommutant(bit(2))), bicommutant(bit(2)));
  const StateSpace other({"x"});
  expect_kind(ErrorKind::NotInMonoid, [&] {
    subsystem_of(close_monoid(sp(), {}), {models::bit_maps(2, 1)[1]});
  });
}

TEST_F(FullTwoBits, JoinMeet) {
  EXPECT_EQ(join(bit(1), bit(2)), whole(t()));
  EXPECT_EQ(meet(bit(1), whole(t())), bit(1));
  EXPECT_EQ(join(bit(1), commutant(whole(t()))), bit(1));
  const auto partial = subsystem_of(t(), {models::bit_maps(2, 1)[1]});
  expect_kind(ErrorKind::NotComplete, [&] { join(partial, bit(2)); });
}

TEST_F(FullTwoBits, Lattice) {
  const auto lat = enumerate_complete(t());
  EXPECT_TRUE(verify_lattice(lat).ok());
  EXPECT_EQ(lat.nodes[lat.bottom], centre(whole(t())));
  EXPECT_EQ(lat.nodes[lat.top], whole(t()));
  EXPECT_NE(std::find(lat.nodes.begin(), lat.nodes.end(), bit(1)), lat.nodes.end());
  EXPECT_NE(std::find(lat.nodes.begin(), lat.nodes.end(), bit(2)), lat.nodes.end());
  for (const auto& n : lat.nodes) EXPECT_TRUE(centre(whole(t())).members().subset_of(n.members()));
}

TEST(Lattice, SmallMonoids) {
  const StateSpace sp({"a", "b", "c", "d"});
  const auto id = close_monoid(sp, {});
  EXPECT_EQ(enumerate_complete(id).nodes.size(), 1U);
  const SpecMap swap_ab = SpecMap::from_function(sp, sp, [](std::size_t i) { return i < 2 ? 1 - i : i; });
  const auto s = close_monoid(sp, {swap_ab});
  const auto lat = enumerate_complete(s);
  ASSERT_EQ(lat.nodes.size(), 1U);
  EXPECT_EQ(lat.nodes[0].size(), 2U);
}

TEST_F(FullTwoBits, Independence) {
  EXPECT_TRUE(is_centreless(whole(t())));
  EXPECT_TRUE(are_independent(bit(1), bit(2)));
  EXPECT_FALSE(are_independent(bit(1), bit(1)));
}

TEST_F(FullTwoBits, GeneratedLumping) {
  const auto l = generated_lumping(bit(1)).lumping;
  EXPECT_EQ(apply(l.map(), make_spec(sp(), {"00"})), make_spec(sp(), {"00", "10"}));
  const auto id = subsystem_of(t(), {SpecMap::identity(sp())});
  EXPECT_EQ(generated_lumping(id).lumping.map(), SpecMap::identity(sp()));
  const auto total = generated_lumping(whole(t()));
  for (auto m : total.lumping.map().table()) EXPECT_EQ(m, sp().all());
}

TEST_F(FullTwoBits, Agents) {
  const auto ag = derive_agents(bit(1), bit(2));
  EXPECT_TRUE(ag.certificate.ok());
  EXPECT_EQ(ag.ins_a.small().size(), 2U);
  EXPECT_EQ(ag.theory_a.monoid().size(), 4U);
  EXPECT_EQ(ag.theory_b.monoid().size(), 4U);
  EXPECT_TRUE(check_agents_theorem_all(ag).ok());
  const auto v = make_spec(sp(), {"00", "11"});
  EXPECT_TRUE(check_agents_theorem(ag, models::bit_maps(2, 1)[2], models::bit_maps(2, 2)[1], v).ok());
  EXPECT_TRUE(check_agents_theorem(ag, SpecMap::identity(sp()), SpecMap::identity(sp()), Specification::full(sp())).ok());
  const auto id = subsystem_of(t(), {SpecMap::identity(sp())});
  const auto trivial = derive_agents(id, id);
  EXPECT_EQ(trivial.ins_a.small().size(), 1U);
  EXPECT_EQ(trivial.ins_b.small().size(), 1U);
  expect_kind(ErrorKind::NotIndependent, [&] { derive_agents(bit(1), bit(1)); });
}

TEST_F(FullTwoBits, Compatibility) {
  const auto c = check_compatibility(keep(1), keep(2));
  EXPECT_TRUE(c.compatible && c.realizable && c.composable);
  EXPECT_FALSE(check_compatibility(keep(1), keep(1)).verdict());
  const auto total = insertion_from_lumping(generated_lumping(whole(t())).lumping);
  EXPECT_TRUE(check_compatibility(keep(1), total).verdict());
}

TEST_F(FullTwoBits, FreelyComposable) {
  const FreeComposition r = check_freely_composable(bit(1), bit(2));
  EXPECT_TRUE(r.condition) << r.witness;
  EXPECT_EQ(r.conclusion.checks().size(), 2U);
  EXPECT_TRUE(r.conclusion.ok());

  const FreeComposition none = check_freely_composable(whole(t()), whole(t()));
  EXPECT_FALSE(none.condition);
  EXPECT_FALSE(none.witness.empty());
  EXPECT_TRUE(none.conclusion.checks().empty());
  expect_kind(ErrorKind::NotComplete, [&] {
    check_freely_composable(subsystem_of(t(), {models::bit_maps(2, 1)[1]}), bit(2));
  });
}

TEST_F(FullTwoBits, FreelyComposableConditionImpliesConclusion) {
  const auto l = enumerate_complete(t());
  models::Rng rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, l.nodes.size() - 1);
  for (int round = 0; round < 60; ++round) {
    const Subsystem& a = l.nodes[pick(rng)];
    const Subsystem& b = l.nodes[pick(rng)];
    const FreeComposition r = check_freely_composable(a, b);
    if (r.condition) {
      EXPECT_TRUE(r.conclusion.ok()) << a.describe() << " / " << b.describe();
    }
  }
}

TEST_F(FullTwoBits, IndependentProcessing) {
  const auto ins = keep(1);
  const auto v = Specification::singleton(ins.small(), 0);
  const auto w = make_spec(sp(), {"00", "11"});
  EXPECT_TRUE(check_independent_processing(ins, models::bit_maps(2, 2)[1], v, w).ok());
  EXPECT_TRUE(check_independent_processing(ins, SpecMap::identity(sp()), v, w).ok());
  expect_kind(ErrorKind::NotIndependent,
              [&] { check_independent_processing(ins, models::bit_maps(2, 1)[1], v, w); });
  expect_kind(ErrorKind::IncompatibleW,
              [&] { check_independent_processing(ins, SpecMap::identity(sp()), v, make_spec(sp(), {"11"})); });
}

TEST_F(FullTwoBits, Inherited) {
  const auto p = close_monoid(sp(), models::all_permutations(sp()));
  const auto inh = inherited_subsystems(p, t());
  const auto flip1 = subsystem_of(p, {SpecMap::identity(sp()), models::bit_maps(2, 1)[1]});
  EXPECT_NE(std::find(inh.begin(), inh.end(), flip1), inh.end());
  const auto id = close_monoid(sp(), {});
  const auto only = inherited_subsystems(id, t());
  ASSERT_EQ(only.size(), 1U);
  EXPECT_EQ(only[0].size(), 1U);
  expect_kind(ErrorKind::NotSubtheory, [&] { inherited_subsystems(t(), p); });
}

TEST_F(FullTwoBits, SwapAndCopies) {
  SubsystemIso iso;
  for (std::size_t i = 0; i < 4; ++i) iso.emplace_back(models::bit_maps(2, 1)[i], models::bit_maps(2, 2)[i]);
  const SpecMap u = models::exchange_bits(2, 1, 2);
  EXPECT_TRUE(verify_swap(bit(1), bit(2), iso, u, u).ok());
  const SpecMap id = SpecMap::identity(sp());
  EXPECT_FALSE(verify_swap(bit(1), bit(2), iso, id, id).ok());
  const auto trivial = subsystem_of(t(), {id});
  EXPECT_TRUE(verify_swap(trivial, trivial, {{id, id}}, id, id).ok());

  const auto a = generated_lumping(bit(2)).lumping;
  EXPECT_EQ(compose(u, compose(a.map(), u)), generated_lumping(bit(1)).lumping.map());
  const auto ins = insertion_from_lumping(a);
  const auto v = Specification::singleton(ins.small(), 0);
  const auto copy = copy_spec(ins, u, u, v);
  EXPECT_EQ(copy.spec, make_spec(sp(), {"00", "10"}));
  EXPECT_EQ(n_copies(ins, v, {id, u}), make_spec(sp(), {"00"}));
  EXPECT_TRUE(n_copies(ins, v, {}).is_full());
  EXPECT_TRUE(n_copies(ins, Specification::full(ins.small()), {id, u}).is_full());
}

TEST(CommutantLaws, RandomMonoids) {
  models::Rng rng(31);
  for (int round = 0; round < 40; ++round) {
    const auto th = models::random_theory(rng, 4, 30);
    const auto& t = th.monoid();
    auto pick = [&] {
      ElementSet s(t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        if (rng() % 3 == 0) s.insert(i);
      return Subsystem(t, s);
    };
    const auto a = pick(), b = pick();
    const auto ca = commutant(a), cb = commutant(b);
    EXPECT_TRUE(a.members().subset_of(bicommutant(a).members()));
    EXPECT_TRUE(is_complete(ca));
    EXPECT_EQ(commutant(Subsystem(t, a.members() | b.members())).members(), ca.members() & cb.members());
    EXPECT_TRUE((ca.members() | cb.members()).subset_of(commutant(Subsystem(t, a.members() & b.members())).members()));
    if (a.members().subset_of(b.members())) {
      EXPECT_TRUE(cb.members().subset_of(ca.members()));
      EXPECT_TRUE(bicommutant(a).members().subset_of(bicommutant(b).members()));
    }
    EXPECT_TRUE(is_complete(Subsystem(t, ca.members() & cb.members())));
    EXPECT_EQ(bicommutant(bicommutant(a)), bicommutant(a));
    for (const auto& n : enumerate_complete(t).nodes)
      EXPECT_TRUE(centre(whole(t)).members().subset_of(n.members()));
  }
}

TEST_F(FullTwoBits, GeneratedLumpingLaws) {
  for (std::size_t k : {1U, 2U}) {
    const auto lam = generated_lumping(bit(k)).lumping.map();
    std::vector<SpecMap> maps = bit(k).maps();
    for (const auto& f : commutant(bit(k)).maps()) maps.push_back(f);
    for (const auto& f : maps) EXPECT_EQ(compose(lam, compose(f, lam)), compose(lam, f));
    for (const auto& f : bit(k).maps())
      for (auto v : all_masks(4)) EXPECT_EQ(f.apply_mask(lam.apply_mask(v)) & ~lam.apply_mask(v), 0U);
  }
}

} // namespace
} // namespace rtk
