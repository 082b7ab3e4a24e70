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

#include "rtk/locality.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "rtk/kernels.hpp"

namespace rtk {

namespace {

void require_same_parent(const Subsystem& a, const Subsystem& b, const char* what) {
  require_same_space(a.parent().space(), b.parent().space(), what);
  if (a.parent().size() != b.parent().size())
    fail(ErrorKind::SpaceMismatch, std::string(what) + ": subsystems of different monoids");
}

void require_complete(const Subsystem& a, const char* what) {
  if (!is_complete(a)) fail(ErrorKind::NotComplete, std::string(what) + " " + a.describe() + " is not complete");
}

bool node_less(const Subsystem& a, const Subsystem& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members().indices() < b.members().indices();
}

} // namespace

Subsystem::Subsystem(TransformationMonoid parent, ElementSet members)
  : parent_(std::move(parent)), members_(std::move(members)) {
  if (members_.universe() != parent_.size())
    fail(ErrorKind::SpaceMismatch, "subsystem member set does not match its monoid");
}

bool Subsystem::contains(const SpecMap& f) const {
  auto i = parent_.find(f);
  return i && members_.contains(*i);
}

std::vector<SpecMap> Subsystem::maps() const {
  std::vector<SpecMap> out;
  for (auto i : members_.indices()) out.push_back(parent_.element(i));
  return out;
}

bool Subsystem::is_submonoid() const {
  if (!members_.contains(0)) return false;
  const auto idx = members_.indices();
  for (auto i : idx)
    for (auto j : idx) {
      auto p = parent_.find(compose(parent_.element(i), parent_.element(j)));
      if (!p || !members_.contains(*p)) return false;
    }
  return true;
}

TransformationMonoid Subsystem::as_monoid() const {
  std::vector<SpecMap> gens;
  std::vector<std::string> names;
  for (auto i : members_.indices()) {
    if (i == 0) continue;
    gens.push_back(parent_.element(i));
    names.push_back(parent_.name(i));
  }
  return close_monoid(parent_.space(), gens, default_monoid_cap(), names);
}

std::string Subsystem::describe() const {
  std::string out = "{";
  bool first = true;
  for (auto i : members_.indices()) {
    if (!first) out += ',';
    out += parent_.name(i);
    first = false;
  }
  return out + "}";
}

Subsystem subsystem_of(const TransformationMonoid& t, const std::vector<SpecMap>& maps) {
  return {t, t.set_of(maps)};
}

Subsystem whole(const TransformationMonoid& t) { return {t, t.all()}; }

Subsystem commutant(const Subsystem& a) {
  const auto& rows = a.parent().commutation();
  ElementSet out = a.parent().all();
  for (auto i : a.members().indices()) out &= rows[i];
  return {a.parent(), std::move(out)};
}

Subsystem bicommutant(const Subsystem& a) { return commutant(commutant(a)); }

bool is_complete(const Subsystem& a) { return bicommutant(a) == a; }

Subsystem join(const Subsystem& a, const Subsystem& b) {
  require_same_parent(a, b, "join");
  require_complete(a, "join argument");
  require_complete(b, "join argument");
  return bicommutant(Subsystem(a.parent(), a.members() | b.members()));
}

Subsystem meet(const Subsystem& a, const Subsystem& b) {
  require_same_parent(a, b, "meet");
  require_complete(a, "meet argument");
  require_complete(b, "meet argument");
  return bicommutant(Subsystem(a.parent(), a.members() & b.members()));
}

SubsystemLattice enumerate_complete(const TransformationMonoid& t, const std::vector<std::vector<SpecMap>>& seeds,
                                    std::size_t cap) {
  const auto& rows = t.commutation();
  auto commutant_of = [&](const ElementSet& s) {
    ElementSet out = t.all();
    for (auto i : s.indices()) out &= rows[i];
    return out;
  };
  // Joins come from meets and commutants: (A ∪ B)″ = (A′ ∩ B′)′.
  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto add = [&](ElementSet s) {
    if (index.count(s) != 0) return;
    if (found.size() >= cap)
      fail(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " complete subsystems");
    index.emplace(s, found.size());
    found.push_back(std::move(s));
  };
  add(commutant_of(t.all()));
  add(t.all());
  if (seeds.empty()) {
    for (std::size_t i = 0; i < t.size(); ++i) add(commutant_of(rows[i]));
  } else {
    for (const auto& s : seeds) add(commutant_of(commutant_of(t.set_of(s))));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    add(commutant_of(found[i]));
    for (std::size_t j = 0; j < i; ++j) add(found[i] & found[j]);
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::vector<std::size_t>> members(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) members[i] = found[i].indices();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
    return members[a] < members[b];
  });
  const std::size_t n = found.size();
  SubsystemLattice l;
  index.clear();
  for (std::size_t k = 0; k < n; ++k) {
    index.emplace(found[order[k]], k);
    l.nodes.emplace_back(t, found[order[k]]);
  }
  std::vector<std::size_t> comm(n);
  for (std::size_t i = 0; i < n; ++i) comm[i] = index.at(commutant_of(l.nodes[i].members()));
  l.leq.assign(n, std::vector<bool>(n, false));
  l.join_table.assign(n, std::vector<std::size_t>(n, 0));
  l.meet_table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      l.leq[i][j] = l.nodes[i].members().subset_of(l.nodes[j].members());
      l.meet_table[i][j] = index.at(l.nodes[i].members() & l.nodes[j].members());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l.join_table[i][j] = comm[l.meet_table[comm[i]][comm[j]]];
  l.bottom = index.at(commutant_of(t.all()));
  l.top = index.at(t.all());
  return l;
}

Report verify_lattice(const SubsystemLattice& l, std::uint64_t seed) {
  Report r;
  const std::size_t n = l.nodes.size();
  const auto& J = l.join_table;
  const auto& M = l.meet_table;
  std::vector<ElementSet> up(n, ElementSet(n)), down(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (l.leq[i][j]) {
        up[i].insert(j);
        down[j].insert(i);
      }
  auto pair_law = [&](const char* name, auto ok) {
    auto miss = kernels::first_failure(n * n, [&](std::size_t k) { return ok(k / n, k % n); });
    std::string w;
    if (miss) w = "nodes " + std::to_string(*miss / n) + "," + std::to_string(*miss % n);
    r.add(name, !miss, w);
  };
  pair_law("order antisymmetric", [&](auto i, auto j) { return i == j || !(l.leq[i][j] && l.leq[j][i]); });
  pair_law("join commutative", [&](auto i, auto j) { return J[i][j] == J[j][i]; });
  pair_law("meet commutative", [&](auto i, auto j) { return M[i][j] == M[j][i]; });
  pair_law("absorption a∨(a∧b) = a", [&](auto i, auto j) { return J[i][M[i][j]] == i; });
  pair_law("absorption a∧(a∨b) = a", [&](auto i, auto j) { return M[i][J[i][j]] == i; });
  pair_law("join is an upper bound", [&](auto i, auto j) { return l.leq[i][J[i][j]] && l.leq[j][J[i][j]]; });
  pair_law("meet is a lower bound", [&](auto i, auto j) { return l.leq[M[i][j]][i] && l.leq[M[i][j]][j]; });
  pair_law("join is least", [&](auto i, auto j) { return (up[i] & up[j]).subset_of(up[J[i][j]]); });
  pair_law("meet is greatest", [&](auto i, auto j) { return (down[i] & down[j]).subset_of(down[M[i][j]]); });
  auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
    return J[J[i][j]][k] == J[i][J[j][k]] && M[M[i][j]][k] == M[i][M[j][k]];
  };
  if (n <= kExhaustiveAssociativity) {
    auto miss = kernels::first_failure(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!assoc(i, j, k)) return false;
      return true;
    });
    r.add("associativity", !miss, miss ? "node " + std::to_string(*miss) : "");
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::string w;
    for (std::size_t s = 0; s < kAssociativitySamples && w.empty(); ++s) {
      const auto i = pick(rng), j = pick(rng), k = pick(rng);
      if (!assoc(i, j, k)) w = "nodes " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
    }
    r.add("associativity (" + std::to_string(kAssociativitySamples) + " sampled triples, seed " +
              std::to_string(seed) + ")",
          w.empty(), w);
  }
  pair_law("bottom identity a∨0 = a", [&](auto i, auto) { return J[i][l.bottom] == i; });
  pair_law("top identity a∧1 = a", [&](auto i, auto) { return M[i][l.top] == i; });
  const Subsystem& top = l.nodes[l.top];
  r.add("top = T", top.size() == top.parent().size());
  r.add("bottom = commutant(T)", l.nodes[l.bottom] == commutant(whole(top.parent())));
  return r;
}

Subsystem centre(const Subsystem& a) {
  return {a.parent(), a.members() & commutant(a).members()};
}

bool is_centreless(const Subsystem& a) {
  const Subsystem c = centre(a);
  return c.size() == 1 && c.members().contains(0);
}

bool are_independent(const Subsystem& a, const Subsystem& b) {
  require_same_parent(a, b, "are_independent");
  if (!a.is_submonoid()) fail(ErrorKind::NotSubmonoid, a.describe() + " is not a submonoid");
  if (!b.is_submonoid()) fail(ErrorKind::NotSubmonoid, b.describe() + " is not a submonoid");
  if (!a.members().subset_of(commutant(b).members())) return false;
  if (!b.members().subset_of(commutant(a).members())) return false;
  return (a.members() & b.members()).size() == 1;
}

GeneratedLumping generated_lumping(const Subsystem& a) {
  const auto& sp = a.parent().space();
  std::vector<StateMask> table(sp.size(), 0);
  for (std::size_t w = 0; w < sp.size(); ++w) table[w] = bit(w);
  for (auto i : a.members().indices()) {
    const auto& f = a.parent().element(i);
    for (std::size_t w = 0; w < sp.size(); ++w)
      for (std::size_t x = 0; x < sp.size(); ++x)
        if ((f.image(x) & ~f.image(w)) == 0) table[w] |= bit(x);
  }
  return saturate_lumping(sp, std::move(table));
}

bool embedding_independent_of(const GaloisInsertion& ins, const std::vector<SpecMap>& maps, std::string* witness) {
  const auto& small = ins.small();
  for (const auto& f : maps) {
    require_same_space(f.source(), ins.big(), "embedding independence");
    for (std::size_t s = 0; s < small.size(); ++s) {
      const StateMask back = ins.h().apply_mask(f.apply_mask(ins.e().image(s)));
      if ((back & ~bit(s)) != 0) {
        if (witness) *witness = "h(f(e({" + small.label(s) + "}))) = " + small.format(back) + " for " + f.describe();
        return false;
      }
    }
  }
  return true;
}

Agents derive_agents(const Subsystem& a, const Subsystem& b) {
  require_same_parent(a, b, "derive_agents");
  require_complete(a, "agent subsystem");
  require_complete(b, "agent subsystem");
  if (!are_independent(a, b)) fail(ErrorKind::NotIndependent, a.describe() + " and " + b.describe() + " are not independent");
  const ResourceTheory global(a.parent());
  GaloisInsertion ins_a = insertion_from_lumping(generated_lumping(commutant(a)).lumping);
  GaloisInsertion ins_b = insertion_from_lumping(generated_lumping(commutant(b)).lumping);
  ResourceTheory ta = restrict_theory(global, a.as_monoid(), ins_a);
  ResourceTheory tb = restrict_theory(global, b.as_monoid(), ins_b);
  Report cert;
  std::string w;
  cert.add("A-view independent of B", embedding_independent_of(ins_a, b.maps(), &w), w);
  w.clear();
  cert.add("B-view independent of A", embedding_independent_of(ins_b, a.maps(), &w), w);
  return {a, b, std::move(ins_a), std::move(ins_b), std::move(ta), std::move(tb), std::move(cert)};
}

Compatibility check_compatibility(const GaloisInsertion& ins_a, const GaloisInsertion& ins_b) {
  require_same_space(ins_a.big(), ins_b.big(), "check_compatibility");
  const auto& big = ins_a.big();
  const auto& sa = ins_a.small();
  const auto& sb = ins_b.small();
  if (big.size() > 16 || sa.size() > 10 || sb.size() > 10)
    fail(ErrorKind::TooLarge, "free-composition check is exhaustive and limited to 16 global and 10 local states");
  const auto va = all_masks(sa.size());
  const auto wb = all_masks(sb.size());
  Compatibility c;

  c.compatible = true;
  for (auto v : va)
    if (ins_b.h().apply_mask(ins_a.e().apply_mask(v)) != sb.all()) {
      c.compatible = false;
      if (c.witness.empty()) c.witness = "h_B(e_A(" + sa.format(v) + ")) is not Ω_B";
    }
  for (auto w : wb)
    if (ins_a.h().apply_mask(ins_b.e().apply_mask(w)) != sa.all()) {
      c.compatible = false;
      if (c.witness.empty()) c.witness = "h_A(e_B(" + sb.format(w) + ")) is not Ω_A";
    }

  // Every global specification Z realizes the local pair (h_A(Z), h_B(Z)).
  std::set<std::pair<StateMask, StateMask>> realized;
  for (auto z : all_masks(big.size())) realized.emplace(ins_a.h().apply_mask(z), ins_b.h().apply_mask(z));
  c.realizable = realized.size() == va.size() * wb.size();

  c.composable = true;
  for (auto v : va)
    for (auto w : wb) {
      const StateMask z = ins_a.e().apply_mask(v) & ins_b.e().apply_mask(w);
      if (z == 0 || ins_a.h().apply_mask(z) != v) {
        c.composable = false;
        if (c.witness.empty()) c.witness = "V_A=" + sa.format(v) + " W_B=" + sb.format(w) + " do not compose";
      }
    }
  if (c.compatible != c.realizable || c.compatible != c.composable)
    fail(ErrorKind::InternalInconsistency, std::string("free-composition conditions disagree: ") +
                                               (c.compatible ? "1" : "0") + (c.realizable ? "1" : "0") +
                                               (c.composable ? "1" : "0"));
  return c;
}

FreeComposition check_freely_composable(const Subsystem& a, const Subsystem& b) {
  require_same_parent(a, b, "check_freely_composable");
  require_complete(a, "agent subsystem");
  require_complete(b, "agent subsystem");
  const StateSpace& sp = a.parent().space();
  if (sp.size() > 6) fail(ErrorKind::TooLarge, "freely composable check is exhaustive and limited to six states");
  const auto masks = all_masks(sp.size());
  const std::size_t n = masks.size();
  // fibres[f][V]: the X with f(X) = f(V), as a bit set over mask indices.
  auto fibres = [&](const Subsystem& s) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& f : commutant(s).maps()) {
      std::vector<StateMask> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = f.apply_mask(masks[i]);
      std::vector<std::uint64_t> row(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (img[i] == img[j]) row[i] |= std::uint64_t{1} << j;
      out.push_back(std::move(row));
    }
    return out;
  };
  const auto fa = fibres(a), fb = fibres(b);
  FreeComposition r;
  r.condition = true;
  for (std::size_t v = 0; v < n && r.condition; ++v)
    for (std::size_t w = 0; w < n && r.condition; ++w) {
      bool found = false;
      for (const auto& f : fa) {
        for (const auto& g : fb)
          if ((f[v] & g[w]) != 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) {
        r.condition = false;
        r.witness = "V = " + sp.format(masks[v]) + ", W = " + sp.format(masks[w]);
      }
    }
  if (!r.condition) return r;

  const Lumping la = generated_lumping(commutant(a)).lumping;
  const Lumping lb = generated_lumping(commutant(b)).lumping;
  std::string wab, wba;
  for (auto v : masks) {
    if (wab.empty() && la.map().apply_mask(lb.map().apply_mask(v)) != sp.all()) wab = sp.format(v);
    if (wba.empty() && lb.map().apply_mask(la.map().apply_mask(v)) != sp.all()) wba = sp.format(v);
  }
  r.conclusion.add("Λ_A∘Λ_B(V) = Ω", wab.empty(), wab);
  r.conclusion.add("Λ_B∘Λ_A(V) = Ω", wba.empty(), wba);
  return r;
}

Report check_independent_processing(const GaloisInsertion& ins_a, const SpecMap& f_b, const Specification& v_a,
                                    const Specification& w) {
  require_same_space(ins_a.small(), v_a.space(), "independent processing (local)");
  require_same_space(ins_a.big(), w.space(), "independent processing (global)");
  std::string why;
  if (!embedding_independent_of(ins_a, {f_b}, &why)) fail(ErrorKind::NotIndependent, why);
  const StateMask ea = ins_a.e().apply_mask(v_a.mask());
  if ((ea & w.mask()) == 0)
    fail(ErrorKind::IncompatibleW, w.to_string() + " contradicts e_A(" + v_a.to_string() + ")");
  const StateMask lhs = f_b.apply_mask(ea & w.mask());
  const StateMask rhs = ea & f_b.apply_mask(w.mask());
  const auto& big = ins_a.big();
  Report r;
  r.add("f(e_A(V_A) ∩ W) = e_A(V_A) ∩ f(W)", lhs == rhs,
        lhs == rhs ? big.format(lhs) : big.format(lhs) + " vs " + big.format(rhs) + ", differs at " + big.format(lhs ^ rhs));
  return r;
}

namespace {

bool agents_inclusion(const Agents& ag, const SpecMap& f_a, const SpecMap& g_b, StateMask v, std::string* w) {
  const auto& ea = ag.ins_a.e();
  const auto& ha = ag.ins_a.h();
  const auto& eb = ag.ins_b.e();
  const auto& hb = ag.ins_b.h();
  const StateMask lhs = f_a.apply_mask(g_b.apply_mask(v));
  const StateMask ra = ea.apply_mask(ha.apply_mask(f_a.apply_mask(ea.apply_mask(ha.apply_mask(v)))));
  const StateMask rb = eb.apply_mask(hb.apply_mask(g_b.apply_mask(eb.apply_mask(hb.apply_mask(v)))));
  if ((lhs & ~(ra & rb)) == 0) return true;
  if (w) {
    const auto& sp = ag.ins_a.big();
    *w = "V=" + sp.format(v) + ": " + sp.format(lhs) + " not inside " + sp.format(ra & rb);
  }
  return false;
}

} // namespace

Report check_agents_theorem(const Agents& agents, const SpecMap& f_a, const SpecMap& g_b, const Specification& v) {
  if (!agents.a.contains(f_a)) fail(ErrorKind::NotInMonoid, "f_A is not in A");
  if (!agents.b.contains(g_b)) fail(ErrorKind::NotInMonoid, "g_B is not in B");
  Report r;
  std::string w;
  r.add("f_A∘g_B(V) inside both local pictures", agents_inclusion(agents, f_a, g_b, v.mask(), &w), w);
  return r;
}

Report check_agents_theorem_all(const Agents& agents) {
  const auto fa = agents.a.maps();
  const auto gb = agents.b.maps();
  const auto vs = all_masks(agents.ins_a.big().size());
  const std::size_t n = fa.size() * gb.size();
  auto miss = kernels::first_failure(n, [&](std::size_t k) {
    for (auto v : vs)
      if (!agents_inclusion(agents, fa[k / gb.size()], gb[k % gb.size()], v, nullptr)) return false;
    return true;
  });
  Report r;
  std::string w;
  if (miss) {
    const auto& f = fa[*miss / gb.size()];
    const auto& g = gb[*miss % gb.size()];
    for (auto v : vs)
      if (!agents_inclusion(agents, f, g, v, &w)) break;
  }
  r.add("agents inclusion over " + std::to_string(n) + " pairs and " + std::to_string(vs.size()) + " specifications",
        !miss, w);
  return r;
}

std::vector<Subsystem> inherited_subsystems(const TransformationMonoid& t, const TransformationMonoid& m,
                                            const std::vector<std::vector<SpecMap>>& seeds) {
  require_same_space(t.space(), m.space(), "inherited_subsystems");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!m.contains(t.element(i))) fail(ErrorKind::NotSubtheory, "map " + t.name(i) + " is not in the larger monoid");
  const SubsystemLattice l = enumerate_complete(m, seeds);
  std::vector<Subsystem> out;
  for (const auto& node : l.nodes) {
    ElementSet s(t.size());
    for (auto i : node.members().indices())
      if (auto j = t.find(m.element(i))) s.insert(*j);
    Subsystem sub(t, std::move(s));
    if (!sub.is_submonoid())
      fail(ErrorKind::InternalInconsistency, "intersection " + sub.describe() + " is not a submonoid");
    if (std::find(out.begin(), out.end(), sub) == out.end()) out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), node_less);
  return out;
}

Report verify_swap(const Subsystem& a, const Subsystem& b, const SubsystemIso& iso, const SpecMap& u,
                   const SpecMap& u_inv) {
  require_same_parent(a, b, "verify_swap");
  require_complete(a, "swap subsystem");
  require_complete(b, "swap subsystem");
  if (!are_independent(a, b)) fail(ErrorKind::NotIndependent, a.describe() + " and " + b.describe() + " are not independent");
  const auto& t = a.parent();

  if (iso.size() != a.size() || iso.size() != b.size())
    fail(ErrorKind::NotIsomorphism, "isomorphism must pair every element of A with one of B");
  std::map<std::size_t, std::size_t> fwd, bwd;
  for (const auto& [fa, fb] : iso) {
    if (!a.contains(fa) || !b.contains(fb)) fail(ErrorKind::NotIsomorphism, "isomorphism pairs a map outside A or B");
    const auto i = t.index_of(fa), j = t.index_of(fb);
    if (!fwd.emplace(i, j).second || !bwd.emplace(j, i).second)
      fail(ErrorKind::NotIsomorphism, "isomorphism is not a bijection at " + t.name(i));
  }
  if (fwd.at(0) != 0) fail(ErrorKind::NotIsomorphism, "isomorphism does not fix the identity");
  for (auto [i, ib] : fwd)
    for (auto [j, jb] : fwd) {
      const auto p = t.index_of(compose(t.element(i), t.element(j)));
      const auto pb = t.index_of(compose(t.element(ib), t.element(jb)));
      if (fwd.at(p) != pb)
        fail(ErrorKind::NotIsomorphism, "isomorphism breaks composition at " + t.name(i) + "*" + t.name(j));
    }

  const Subsystem ab = join(a, b);
  if (!ab.contains(u)) fail(ErrorKind::NotInJoin, "u is not in the join of A and B");
  if (!ab.contains(u_inv)) fail(ErrorKind::NotInJoin, "u_inv is not in the join of A and B");

  Report r;
  const SpecMap id = SpecMap::identity(t.space());
  r.add("u∘u_inv = id", compose(u, u_inv) == id);
  r.add("u_inv∘u = id", compose(u_inv, u) == id);

  const auto ia = a.members().indices();
  const auto ib = b.members().indices();
  auto conj_law = [&](bool inv_first) {
    auto miss = kernels::first_failure(ia.size() * ib.size(), [&](std::size_t k) {
      const auto fa = ia[k / ib.size()], gb = ib[k % ib.size()];
      const SpecMap inner = compose(t.element(fa), t.element(gb));
      const SpecMap lhs = inv_first ? compose(u_inv, compose(inner, u)) : compose(u, compose(inner, u_inv));
      const SpecMap rhs = compose(t.element(fwd.at(fa)), t.element(bwd.at(gb)));
      return lhs == rhs;
    });
    std::string w;
    if (miss) w = "f_A=" + t.name(ia[*miss / ib.size()]) + " g_B=" + t.name(ib[*miss % ib.size()]);
    return std::make_pair(!miss.has_value(), w);
  };
  auto [ok1, w1] = conj_law(true);
  r.add("u_inv∘f_A∘g_B∘u = f_B∘g_A", ok1, w1);
  auto [ok2, w2] = conj_law(false);
  r.add("u∘f_A∘g_B∘u_inv = f_B∘g_A", ok2, w2);
  return r;
}

Copy copy_spec(const GaloisInsertion& ins_a, const SpecMap& u, const SpecMap& u_inv, const Specification& v_a) {
  require_same_space(ins_a.small(), v_a.space(), "copy_spec");
  require_same_space(ins_a.big(), u.source(), "copy_spec swap");
  const StateMask c = u.apply_mask(ins_a.e().apply_mask(v_a.mask()));
  const SpecMap target_lumping = compose(u, compose(ins_a.lumping_map(), u_inv));
  return {Specification(ins_a.big(), c), target_lumping.apply_mask(c) == c};
}

Specification n_copies(const GaloisInsertion& ins_a, const Specification& v_a, const std::vector<SpecMap>& swaps) {
  require_same_space(ins_a.small(), v_a.space(), "n_copies");
  const StateMask local = ins_a.e().apply_mask(v_a.mask());
  StateMask acc = ins_a.big().all();
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    require_same_space(ins_a.big(), swaps[i].source(), "n_copies swap");
    acc &= swaps[i].apply_mask(local);
    if (acc == 0)
      fail(ErrorKind::Incompatible, "copy " + std::to_string(i) + " contradicts copies 0.." + std::to_string(i) +
                                        " (exclusive)");
  }
  return {ins_a.big(), acc};
}

} // namespace rtk
