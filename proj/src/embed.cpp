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

#include "rtk/embed.hpp"

#include <random>
#include <utility>

#include "rtk/kernels.hpp"

namespace rtk {

namespace {

std::vector<StateMask> identity_table(std::size_t n) {
  std::vector<StateMask> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = bit(i);
  return t;
}

/// Member labels glued together, with "|" between them unless all are one character.
std::string class_label(const StateSpace& space, StateMask members) {
  bool short_labels = true;
  for_each_bit(members, [&](std::size_t i) { short_labels = short_labels && space.label(i).size() == 1; });
  std::string out;
  bool first = true;
  for_each_bit(members, [&](std::size_t i) {
    if (!first && !short_labels) out += '|';
    out += space.label(i);
    first = false;
  });
  return out;
}

StateMask random_mask(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<StateMask> d(1, low_bits(n));
  return d(rng);
}

void require_insertion(const GaloisInsertion& ins, const char* what) {
  const Report r = verify_insertion(ins);
  if (!r.ok()) {
    const Check* c = r.first_failure();
    fail(ErrorKind::NotIntensive, std::string(what) + " is not a Galois insertion: " + c->name +
                                      (c->witness.empty() ? "" : " (" + c->witness + ")"));
  }
}

} // namespace

Report verify_lumping(const SpecMap& f) {
  if (!f.is_endomorphism()) fail(ErrorKind::NotEndomorphism, "a lumping must be an endomorphism");
  Report r;
  const auto& sp = f.source();
  std::string w;
  for (std::size_t i = 0; i < sp.size() && w.empty(); ++i)
    if ((f.image(i) & bit(i)) == 0) w = sp.label(i) + " not in " + sp.format(f.image(i));
  r.add("inflating", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < sp.size() && w.empty(); ++i) {
    const StateMask twice = f.apply_mask(f.image(i));
    if (twice != f.image(i))
      w = "at " + sp.label(i) + ": " + sp.format(twice) + " != " + sp.format(f.image(i));
  }
  r.add("idempotent", w.empty(), w);
  return r;
}

Lumping::Lumping(SpecMap map) : map_(std::move(map)) {
  const Report r = verify_lumping(map_);
  if (const Check* c = r.first_failure())
    fail(ErrorKind::NotLumping, "not a lumping: " + c->name + " fails " + c->witness);
}

bool Lumping::is_partition() const {
  for (std::size_t i = 0; i < space().size(); ++i) {
    bool ok = true;
    for_each_bit(map_.image(i), [&](std::size_t j) { ok = ok && map_.image(j) == map_.image(i); });
    if (!ok) return false;
  }
  return true;
}

GaloisInsertion::GaloisInsertion(SpecMap e, SpecMap h) : e_(std::move(e)), h_(std::move(h)) {
  require_same_space(e_.source(), h_.target(), "insertion small space");
  require_same_space(e_.target(), h_.source(), "insertion big space");
}

GaloisInsertion insertion_from_lumping(const Lumping& lumping) {
  if (!lumping.is_partition())
    fail(ErrorKind::NotPartitionLumping,
         "lumping classes overlap without coinciding; no element-wise insertion realizes it");
  const auto& big = lumping.space();
  const auto& lm = lumping.map();
  std::vector<StateMask> classes;
  std::vector<std::size_t> class_of(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::size_t c = 0;
    while (c < classes.size() && classes[c] != lm.image(i)) ++c;
    if (c == classes.size()) classes.push_back(lm.image(i));
    class_of[i] = c;
  }
  std::vector<std::string> labels;
  for (auto m : classes) labels.push_back(class_label(big, m));
  StateSpace small(std::move(labels));
  std::vector<StateMask> h(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) h[i] = bit(class_of[i]);
  return {SpecMap(small, big, classes), SpecMap(big, small, std::move(h))};
}

bool is_order_embedding(const SpecMap& e) {
  const auto& t = e.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    StateMask others = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) others |= t[j];
    if ((t[i] & ~others) == 0) return false;
  }
  return true;
}

Report verify_insertion(const GaloisInsertion& ins, std::uint64_t seed) {
  Report r;
  const auto& small = ins.small();
  const auto& big = ins.big();
  const auto& e = ins.e();
  const auto& h = ins.h();

  std::string w;
  for (std::size_t s = 0; s < small.size() && w.empty(); ++s) {
    const StateMask back = h.apply_mask(e.image(s));
    if (back != bit(s)) w = "h(e({" + small.label(s) + "})) = " + small.format(back);
  }
  r.add("h∘e = id", w.empty(), w);

  w.clear();
  for (std::size_t b = 0; b < big.size() && w.empty(); ++b)
    if (popcount(h.image(b)) != 1) w = "h({" + big.label(b) + "}) = " + small.format(h.image(b));
  r.add("h single-valued", w.empty(), w);

  r.add("e order embedding", is_order_embedding(e));

  // Z ⊆ e(V) ⇔ h(Z) ⊆ V
  auto adjoint_ok = [&](StateMask v, StateMask z) {
    const bool lhs = (z & ~e.apply_mask(v)) == 0;
    const bool rhs = (h.apply_mask(z) & ~v) == 0;
    return lhs == rhs;
  };
  w.clear();
  if (small.size() <= 5 && big.size() <= 12) {
    const auto vs = all_masks(small.size());
    const auto zs = all_masks(big.size());
    std::vector<StateMask> bad_z(vs.size(), 0);
    auto miss = kernels::first_failure(vs.size(), [&](std::size_t k) {
      for (auto z : zs)
        if (!adjoint_ok(vs[k], z)) {
          bad_z[k] = z;
          return false;
        }
      return true;
    });
    if (miss) w = "V=" + small.format(vs[*miss]) + " Z=" + big.format(bad_z[*miss]);
    r.add("adjunction (exhaustive)", !miss.has_value(), w);
  } else {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<StateMask, StateMask>> pairs(10000);
    for (auto& p : pairs) p = {random_mask(rng, small.size()), random_mask(rng, big.size())};
    auto miss = kernels::first_failure(pairs.size(),
                                       [&](std::size_t k) { return adjoint_ok(pairs[k].first, pairs[k].second); });
    if (miss) w = "V=" + small.format(pairs[*miss].first) + " Z=" + big.format(pairs[*miss].second);
    r.add("adjunction (10000 samples, seed " + std::to_string(seed) + ")", !miss.has_value(), w);
  }
  return r;
}

std::string to_string(EmbeddingKind kind) {
  switch (kind) {
  case EmbeddingKind::Extensive: return "extensive";
  case EmbeddingKind::Intensive: return "intensive";
  case EmbeddingKind::General: return "general";
  }
  return "general";
}

Embedding classify_embedding(const SpecMap& e) {
  if (!is_order_embedding(e)) fail(ErrorKind::NotOrderEmbedding, "map is not an order embedding: " + e.describe());
  if (e.is_deterministic()) return {e, EmbeddingKind::Extensive, std::nullopt};

  const auto& big = e.target();
  std::vector<StateMask> h(big.size(), 0);
  for (std::size_t s = 0; s < e.source().size(); ++s)
    for_each_bit(e.image(s), [&](std::size_t b) { h[b] |= bit(s); });
  bool single = true;
  for (auto m : h) single = single && popcount(m) == 1;
  if (single) {
    SpecMap adj(big, e.source(), std::move(h));
    if (verify_insertion(GaloisInsertion(e, adj)).ok()) return {e, EmbeddingKind::Intensive, adj};
  }
  return {e, EmbeddingKind::General, std::nullopt};
}

SpecMap Decomposition::product() const {
  return order == FactorOrder::ExtensiveAfterIntensive ? compose(extensive, intensive)
                                                       : compose(intensive, extensive);
}

Decomposition decompose_embedding(const SpecMap& e, FactorOrder order) {
  if (!is_order_embedding(e)) fail(ErrorKind::NotOrderEmbedding, "map is not an order embedding: " + e.describe());
  const auto& src = e.source();
  const auto& big = e.target();
  StateMask hit = 0;
  for (std::size_t s = 0; s < src.size(); ++s) {
    if ((hit & e.image(s)) != 0)
      fail(ErrorKind::NotDecomposable, "images of singletons overlap at " + big.format(hit & e.image(s)));
    hit |= e.image(s);
  }

  if (order == FactorOrder::ExtensiveAfterIntensive) {
    std::vector<std::string> labels;
    std::vector<std::size_t> pos(big.size(), 0);
    for_each_bit(hit, [&](std::size_t b) {
      pos[b] = labels.size();
      labels.push_back(big.label(b));
    });
    StateSpace mid(std::move(labels));
    std::vector<StateMask> inten(src.size(), 0);
    for (std::size_t s = 0; s < src.size(); ++s)
      for_each_bit(e.image(s), [&](std::size_t b) { inten[s] |= bit(pos[b]); });
    std::vector<StateMask> ext;
    for_each_bit(hit, [&](std::size_t b) { ext.push_back(bit(b)); });
    return {mid, SpecMap(mid, big, std::move(ext)), SpecMap(src, mid, std::move(inten)), order};
  }

  // Source states first, then the target states nothing lands on.
  std::vector<std::string> labels = src.labels();
  std::vector<std::size_t> unhit;
  for (std::size_t b = 0; b < big.size(); ++b)
    if ((hit & bit(b)) == 0) {
      std::string l = big.label(b);
      auto taken = [&](const std::string& x) {
        for (const auto& y : labels)
          if (y == x) return true;
        return false;
      };
      while (taken(l)) l += '\'';
      labels.push_back(std::move(l));
      unhit.push_back(b);
    }
  StateSpace mid(std::move(labels));
  std::vector<StateMask> inten = e.table();
  for (auto b : unhit) inten.push_back(bit(b));
  return {mid, SpecMap(src, mid, identity_table(src.size())), SpecMap(mid, big, std::move(inten)), order};
}

GaloisInsertion nest_compose(const GaloisInsertion& inner, const GaloisInsertion& outer) {
  require_same_space(inner.big(), outer.small(), "nest_compose");
  require_insertion(inner, "inner embedding");
  require_insertion(outer, "outer embedding");
  GaloisInsertion out(compose(outer.e(), inner.e()), compose(inner.h(), outer.h()));
  require_insertion(out, "nested embedding");
  return out;
}

GaloisInsertion nest_middle(const GaloisInsertion& to_a, const GaloisInsertion& to_ab) {
  require_same_space(to_a.big(), to_ab.big(), "nest_middle");
  require_insertion(to_a, "embedding of A");
  require_insertion(to_ab, "embedding of AB");
  const SpecMap la = to_a.lumping_map();
  const SpecMap lab = to_ab.lumping_map();
  const auto& big = to_a.big();
  for (std::size_t b = 0; b < big.size(); ++b)
    if ((lab.image(b) & ~la.image(b)) != 0)
      fail(ErrorKind::LumpingOrderViolated, "at " + big.label(b) + ": " + big.format(lab.image(b)) +
                                                " not inside " + big.format(la.image(b)));
  GaloisInsertion out(compose(to_ab.h(), to_a.e()), compose(to_a.h(), to_ab.e()));
  require_insertion(out, "middle embedding");
  return out;
}

bool is_local(const Lumping& lumping, const Specification& v) {
  require_same_space(lumping.space(), v.space(), "is_local");
  return lumping.map().apply_mask(v.mask()) == v.mask();
}

ResourceTheory restrict_theory(const ResourceTheory& t, const TransformationMonoid& agent,
                               const GaloisInsertion& ins) {
  require_same_space(t.space(), ins.big(), "restrict_theory");
  require_same_space(t.space(), agent.space(), "restrict_theory agent");
  std::vector<SpecMap> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < agent.size(); ++i) {
    if (!t.monoid().contains(agent.element(i)))
      fail(ErrorKind::NotSubmonoid, "agent map " + agent.name(i) + " is not allowed by the theory");
    if (i == 0) continue;
    gens.push_back(compose(ins.h(), compose(agent.element(i), ins.e())));
    names.push_back(agent.name(i));
  }
  return ResourceTheory(close_monoid(ins.small(), gens, default_monoid_cap(), names));
}

ResourceTheory effective_theory(const ResourceTheory& t, const TransformationMonoid& agent,
                                const GaloisInsertion& ins, const Specification& side) {
  require_same_space(t.space(), ins.big(), "effective_theory");
  require_same_space(t.space(), side.space(), "effective_theory side resource");
  require_same_space(t.space(), agent.space(), "effective_theory agent");
  const auto& small = ins.small();
  const StateMask hk = ins.h().apply_mask(side.mask());
  if (hk != small.all())
    fail(ErrorKind::IncompatibleSideResource, "h(" + side.to_string() + ") = " + small.format(hk) + " is not the whole space");
  std::vector<StateMask> cut(small.size());
  for (std::size_t s = 0; s < small.size(); ++s) {
    cut[s] = ins.e().image(s) & side.mask();
    if (cut[s] == 0)
      fail(ErrorKind::EmptyIntersection, "e({" + small.label(s) + "}) misses " + side.to_string());
  }
  std::vector<SpecMap> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < agent.size(); ++i) {
    const auto& f = agent.element(i);
    if (!t.monoid().contains(f))
      fail(ErrorKind::NotSubmonoid, "agent map " + agent.name(i) + " is not allowed by the theory");
    std::vector<StateMask> tab(small.size());
    for (std::size_t s = 0; s < small.size(); ++s) tab[s] = ins.h().apply_mask(f.apply_mask(cut[s]));
    gens.emplace_back(small, small, std::move(tab));
    names.push_back(agent.name(i));
  }
  return ResourceTheory(close_monoid(small, gens, default_monoid_cap(), names));
}

GeneratedLumping saturate_lumping(const StateSpace& space, std::vector<StateMask> table) {
  SpecMap cur(space, space, std::move(table));
  std::size_t iterations = 0;
  for (;;) {
    SpecMap sq = compose(cur, cur);
    if (sq == cur) break;
    cur = std::move(sq);
    ++iterations;
  }
  return {Lumping(std::move(cur)), iterations};
}

GeneratedLumping lumping_from_maps(const StateSpace& space, const std::vector<SpecMap>& maps) {
  std::vector<StateMask> table = identity_table(space.size());
  for (const auto& f : maps) {
    require_same_space(f.source(), space, "lumping_from_maps");
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j)
        if (f.image(j) == f.image(i)) table[i] |= bit(j);
  }
  return saturate_lumping(space, std::move(table));
}

} // namespace rtk
