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

#include "rtk/laws.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rtk/approx.hpp"
#include "rtk/convex.hpp"
#include "rtk/embed.hpp"
#include "rtk/locality.hpp"
#include "rtk/models.hpp"
#include "rtk/oracle.hpp"
#include "rtk/theory.hpp"

namespace rtk::laws {

namespace {

using models::Rng;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

StateSpace letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return StateSpace(std::move(labels));
}

std::string count_label(const std::string& name, std::size_t n, const std::string& unit) {
  return name + " (" + std::to_string(n) + " " + unit + ")";
}

/// Records the first failure of a named law over many instances.
struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}
  std::string name;
  std::size_t checked = 0;
  std::string witness;
  void check(bool ok, const std::string& w) {
    ++checked;
    if (!ok && witness.empty()) witness = w;
  }
  void into(Report& r, const std::string& unit) const {
    r.add(count_label(name, checked, unit), witness.empty(), witness);
  }
};

std::string points_text(const std::vector<RationalPoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "(" : " (") + p.to_string() + ")";
  return s;
}

std::vector<RationalPoint> random_points(Rng& rng, std::size_t n, std::size_t dim) {
  std::vector<RationalPoint> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(models::random_point(rng, dim));
  return v;
}

/// Closes `gens`, dropping trailing generators until the cap holds.
TransformationMonoid close_capped(const StateSpace& sp, std::vector<SpecMap> gens, std::size_t cap) {
  for (;;) {
    try {
      return close_monoid(sp, gens, cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded || gens.empty()) throw;
      gens.pop_back();
    }
  }
}

} // namespace

Report preorder(std::uint64_t seed, std::size_t theories, std::size_t queries) {
  Rng rng(seed);
  Tally refl{"reflexivity"}, trans{"transitivity"}, meet{"V→Z ⇒ V∩W→Z"}, orc{"agrees with oracle"};
  for (std::size_t t = 0; t < theories; ++t) {
    const ResourceTheory th = models::random_theory(rng);
    const auto& sp = th.space();
    const auto& els = th.monoid().elements();
    auto ask = [&](const Specification& a, const Specification& b) {
      const ReachWitness fast = reaches(th, a, b);
      const ReachWitness slow = oracle::reaches(th, a, b);
      orc.check(fast.found == slow.found && fast.index == slow.index,
                a.to_string() + "→" + b.to_string() + " fast " + (fast.found ? "yes" : "no") + " oracle " +
                    (slow.found ? "yes" : "no"));
      return fast.found;
    };
    for (std::size_t q = 0; q < queries; ++q) {
      const Specification v = models::random_spec(rng, sp);
      refl.check(ask(v, v), v.to_string() + " does not reach itself");

      const auto& f = els[pick(rng, 0, els.size() - 1)];
      const Specification w(sp, f.apply_mask(v.mask()) | (rng() & sp.all() & (rng() & rng())));
      const auto& g = els[pick(rng, 0, els.size() - 1)];
      const Specification z(sp, g.apply_mask(w.mask()) | (rng() & sp.all() & (rng() & rng())));
      const Specification z2 = models::random_spec(rng, sp);
      const Specification zs = (q % 2 == 0) ? z : z2;
      if (ask(v, w) && ask(w, zs))
        trans.check(ask(v, zs), v.to_string() + "→" + w.to_string() + "→" + zs.to_string());

      const Specification w2 = models::random_spec(rng, sp);
      const StateMask vw = v.mask() & w2.mask();
      const Specification target = (q % 2 == 0) ? z : z2;
      if (vw != 0 && ask(v, target)) {
        const Specification both(sp, vw);
        meet.check(ask(both, target), v.to_string() + "∩" + w2.to_string() + " fails to reach " + target.to_string());
      }
    }
  }
  Report r;
  refl.into(r, "queries");
  trans.into(r, "chains");
  meet.into(r, "queries");
  orc.into(r, "queries");
  return r;
}

Report lumpings(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  Tally ins_ok{"insertion laws hold exhaustively"}, table{"Λ = e∘h"};
  for (std::size_t i = 0; i < count; ++i) {
    const StateSpace sp = letters(pick(rng, 1, 5));
    const Lumping lump = models::random_partition_lumping(rng, sp);
    const GaloisInsertion ins = insertion_from_lumping(lump);
    const Report rep = verify_insertion(ins);
    bool exhaustive = rep.find("adjunction (exhaustive)") != nullptr;
    const Check* bad = rep.first_failure();
    ins_ok.check(rep.ok() && exhaustive, lump.map().describe() + ": " + (bad ? bad->name + " " + bad->witness : "sampled"));
    table.check(ins.lumping_map() == lump.map(), lump.map().describe() + " vs " + ins.lumping_map().describe());
  }
  Report r;
  ins_ok.into(r, "lumpings");
  table.into(r, "lumpings");
  return r;
}

Report decompositions(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  Tally prod{"e = e_ext∘e_int"}, prod2{"e = e_int∘e_ext"}, kinds{"factor kinds"};
  for (std::size_t i = 0; i < count; ++i) {
    const SpecMap e = models::random_embedding(rng, 5);
    for (auto order : {FactorOrder::ExtensiveAfterIntensive, FactorOrder::IntensiveAfterExtensive}) {
      const Decomposition d = decompose_embedding(e, order);
      auto& t = order == FactorOrder::ExtensiveAfterIntensive ? prod : prod2;
      t.check(d.product() == e, e.describe() + " became " + d.product().describe());
      const auto ke = classify_embedding(d.extensive).kind;
      const auto ki = classify_embedding(d.intensive).kind;
      const bool int_ok = ki == EmbeddingKind::Intensive || d.intensive.is_deterministic();
      kinds.check(ke == EmbeddingKind::Extensive && int_ok,
                  e.describe() + ": extensive factor " + to_string(ke) + ", intensive factor " + to_string(ki));
    }
  }
  Report r;
  prod.into(r, "embeddings");
  prod2.into(r, "embeddings");
  kinds.into(r, "factorizations");
  return r;
}

Report free_composition(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::size_t compatible = 0;
  std::string witness;
  for (std::size_t i = 0; i < count && witness.empty(); ++i) {
    std::optional<Lumping> la, lb;
    StateSpace sp = letters(1);
    if (rng() % 2 == 0) {
      // A grid a × b with row and column classes, states shuffled.
      const std::size_t a = pick(rng, 1, 4), b = pick(rng, 1, 4);
      sp = letters(a * b);
      std::vector<std::size_t> where(a * b);
      std::iota(where.begin(), where.end(), 0);
      std::shuffle(where.begin(), where.end(), rng);
      std::vector<StateMask> ta(a * b, 0), tb(a * b, 0);
      for (std::size_t x = 0; x < a * b; ++x)
        for (std::size_t y = 0; y < a * b; ++y) {
          if (where[x] / b == where[y] / b) ta[x] |= bit(y);
          if (where[x] % b == where[y] % b) tb[x] |= bit(y);
        }
      la.emplace(SpecMap(sp, sp, ta));
      lb.emplace(SpecMap(sp, sp, tb));
    } else {
      sp = letters(pick(rng, 1, 5));
      la.emplace(models::random_partition_lumping(rng, sp));
      lb.emplace(models::random_partition_lumping(rng, sp));
    }
    try {
      const auto c = check_compatibility(insertion_from_lumping(*la), insertion_from_lumping(*lb));
      compatible += c.compatible ? 1 : 0;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InternalInconsistency) throw;
      witness = la->map().describe() + " / " + lb->map().describe() + ": " + e.what();
    }
  }
  Report r;
  r.add("three conditions agree (" + std::to_string(count) + " pairs, " + std::to_string(compatible) + " compatible)",
        witness.empty(), witness);
  return r;
}

Report robustness(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const ApproximationStructure s = models::hamming_structure(2);
  const StateSpace& sp = s.space();
  Tally stable{"theory is stable"}, implication{"V→W, W robust ⇒ V robust"}, converse{"V→W, W not robust ⇒ V not robust"};
  std::size_t robust_w = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<SpecMap> gens;
    const std::size_t ng = pick(rng, 0, 3);
    for (std::size_t g = 0; g < ng; ++g)
      for (int tries = 0; tries < 500; ++tries) {
        SpecMap f = models::random_map(rng, sp);
        if (is_stable(ResourceTheory(close_capped(sp, {f}, 64)), s).ok()) {
          gens.push_back(std::move(f));
          break;
        }
      }
    const ResourceTheory t(close_capped(sp, gens, 256));
    const Report st = is_stable(t, s);
    stable.check(st.ok(), st.ok() ? "" : st.first_failure()->witness);

    const Specification v = models::random_spec(rng, sp);
    const auto& els = t.monoid().elements();
    const auto& f = els[pick(rng, 0, els.size() - 1)];
    const Specification w(sp, f.apply_mask(v.mask()) | (rng() & rng() & sp.all()));
    const std::size_t eps = pick(rng, 0, s.index().size() - 1);
    const bool rv = is_robust(t, s, v, eps), rw = is_robust(t, s, w, eps);
    robust_w += rw ? 1 : 0;
    const std::string ctx = "|T|=" + std::to_string(els.size()) + " V=" + v.to_string() + " W=" + w.to_string() +
                            " ε=" + s.index().label(eps);
    implication.check(!rw || rv, ctx);
    converse.check(rw || !rv, ctx);
  }
  Report r;
  stable.into(r, "theories");
  implication.into(r, "instances, " + std::to_string(robust_w) + " with W robust");
  const std::string conv_name = count_label(converse.name, converse.checked, "instances") +
                                (converse.witness.empty() ? " [no counterexample]" : " [refuted, informational]");
  r.add(conv_name, true, converse.witness);
  return r;
}

Report mixtures(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  Tally direct{"nested = direct sum"}, combining{"combining mixtures"}, permuting{"permuting mixtures"},
      distributions{"mixture of distributions"}, repetition{"repetition"}, distributivity{"distributivity"};
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t dim = pick(rng, 1, 3);
    const std::size_t n = pick(rng, 2, 6);
    const auto pts = random_points(rng, n, dim);
    const Distribution p = models::random_distribution(rng, n);

    const auto nm = nested_mixture(p, pts);
    direct.check(nm == weighted_sum(p, pts), points_text(pts));

    {
      const Rational r = models::random_probability(rng), a = models::random_probability(rng),
                     b = models::random_probability(rng);
      const auto &nu = pts[0], &om = pts[1], &tau = pts[n - 1];
      const auto lhs = mix(r, mix(a, nu, om), mix(b, nu, tau));
      const Rational s = r * a + (1 - r) * b;
      const Rational alpha = s == 1 ? Rational(0) : Rational(r * (1 - a) / (1 - s));
      combining.check(lhs == mix(s, nu, mix(alpha, om, tau)),
                      "r=" + format_rational(r) + " p=" + format_rational(a) + " q=" + format_rational(b));
    }
    {
      std::vector<std::size_t> pi(n);
      std::iota(pi.begin(), pi.end(), 0);
      std::shuffle(pi.begin(), pi.end(), rng);
      std::vector<Rational> pw;
      std::vector<RationalPoint> pv;
      for (auto k : pi) {
        pw.push_back(p[k]);
        pv.push_back(pts[k]);
      }
      permuting.check(nested_mixture(Distribution(pw), pv) == nm, points_text(pts));
    }
    {
      const Distribution p2 = models::random_distribution(rng, n);
      const Rational q = models::random_probability(rng);
      std::vector<Rational> blend;
      for (std::size_t k = 0; k < n; ++k) blend.push_back(q * p[k] + (1 - q) * p2[k]);
      distributions.check(nested_mixture(Distribution(blend), pts) == mix(q, nm, nested_mixture(p2, pts)),
                          "q=" + format_rational(q));
    }
    {
      auto rep = pts;
      rep[n - 1] = rep[n - 2];
      std::vector<Rational> pw(p.weights().begin(), p.weights().end() - 1);
      pw.back() += p[n - 1];
      std::vector<RationalPoint> pv(rep.begin(), rep.end() - 1);
      repetition.check(nested_mixture(p, rep) == nested_mixture(Distribution(pw), pv), points_text(rep));
    }
    {
      const Rational r = models::random_probability(rng);
      const auto om = models::random_point(rng, dim);
      auto lhs_v = pts;
      const RationalPoint nu = pts[n - 1];
      lhs_v[n - 1] = mix(r, nu, om);
      std::vector<Rational> pw(p.weights().begin(), p.weights().end() - 1);
      pw.push_back(r * p[n - 1]);
      pw.push_back((1 - r) * p[n - 1]);
      std::vector<RationalPoint> pv(pts.begin(), pts.end() - 1);
      pv.push_back(nu);
      pv.push_back(om);
      distributivity.check(nested_mixture(p, lhs_v) == nested_mixture(Distribution(pw), pv),
                           "r=" + format_rational(r) + " " + points_text(lhs_v));
    }
  }
  Report r;
  for (const Tally* t : {&direct, &combining, &permuting, &distributions, &repetition, &distributivity})
    t->into(r, "instances");
  return r;
}

Report hulls(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  Tally consistency{"hull of mixture = mixture of hulls"}, oracle_ok{"simplex agrees with oracle"};
  std::size_t inside = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t dim = pick(rng, 1, 2);
    const PointSpec v(random_points(rng, pick(rng, 1, 5), dim));
    const PointSpec w(random_points(rng, pick(rng, 1, 5), dim));
    const Rational r = models::random_probability(rng);
    const PointSpec lhs = mix_specs(r, v, w);
    const PointSpec rhs = mix_specs(r, extreme_points(v), extreme_points(w));
    consistency.check(prob_equivalent(lhs, rhs), "r=" + format_rational(r) + " V=" + v.to_string() + " W=" + w.to_string());

    const PointSpec q(random_points(rng, pick(rng, 1, 6), dim));
    std::vector<RationalPoint> probes = random_points(rng, 4, dim);
    probes.push_back(q[0]);
    probes.push_back(nested_mixture(models::random_distribution(rng, q.size()), q.points()));
    if (q.size() >= 2) probes.push_back(mix(models::random_probability(rng), q[0], q[q.size() - 1]));
    for (const auto& x : probes) {
      const bool fast = hull_contains(q, x);
      inside += fast ? 1 : 0;
      oracle_ok.check(fast == oracle::hull_contains(q, x), q.to_string() + " ∋ (" + x.to_string() + ")");
    }
  }
  Report r;
  consistency.into(r, "instances");
  oracle_ok.into(r, "queries, " + std::to_string(inside) + " inside");
  return r;
}

Report all(std::uint64_t seed) {
  Report r;
  r.merge(preorder(seed), "preorder: ");
  r.merge(lumpings(seed), "lumping: ");
  r.merge(decompositions(seed), "decomposition: ");
  r.merge(free_composition(seed), "free composition: ");
  r.merge(robustness(seed), "robustness: ");
  r.merge(mixtures(seed), "mixtures: ");
  r.merge(hulls(seed), "hull: ");
  return r;
}

} // namespace rtk::laws
