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

#include "rtk/approx.hpp"

#include <algorithm>
#include <random>

#include "rtk/kernels.hpp"

namespace rtk {

namespace {

/// Nonempty random subset of a nonempty mask.
StateMask random_subset(std::mt19937_64& rng, StateMask m) {
  std::vector<std::size_t> bits;
  for_each_bit(m, [&](std::size_t i) { bits.push_back(i); });
  StateMask out = rng() & m;
  if (out == 0) out = bit(bits[rng() % bits.size()]);
  return out;
}

} // namespace

ApproxIndex::ApproxIndex(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& order,
                         const std::string& max, const std::optional<std::string>& zero)
  : labels_(std::move(labels)) {
  if (labels_.empty()) fail(ErrorKind::BadIndex, "an approximation index needs at least one element");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) fail(ErrorKind::BadIndex, "index element '" + labels_[i] + "' listed twice");
  const std::size_t n = labels_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : order) leq_[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq_[i][k] && leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[i][j] && leq_[j][i])
        fail(ErrorKind::BadIndex, "order is not antisymmetric: " + labels_[i] + " and " + labels_[j]);
  max_ = index(max);
  for (std::size_t i = 0; i < n; ++i)
    if (!leq_[i][max_]) fail(ErrorKind::BadIndex, "'" + max + "' is not above '" + labels_[i] + "'");
  if (zero) zero_ = index(*zero);
}

ApproxIndex ApproxIndex::chain(std::vector<std::string> labels, bool with_zero) {
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t i = 1; i < labels.size(); ++i) order.emplace_back(labels[i - 1], labels[i]);
  const std::string top = labels.back();
  std::optional<std::string> zero;
  if (with_zero) zero = labels.front();
  return ApproxIndex(std::move(labels), order, top, zero);
}

std::size_t ApproxIndex::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  fail(ErrorKind::UnknownIndex, "no approximation index '" + label + "'");
}

void ApproxIndex::add_chain(const std::vector<std::string>& members,
                            const std::vector<std::tuple<std::string, std::string, std::string>>& sums) {
  Chain c;
  for (const auto& m : members) c.members.push_back(index(m));
  for (auto a : c.members)
    for (auto b : c.members)
      if (!leq_[a][b] && !leq_[b][a])
        fail(ErrorKind::BadIndex, "chain elements " + labels_[a] + " and " + labels_[b] + " are incomparable");
  auto in_chain = [&](std::size_t x) { return std::find(c.members.begin(), c.members.end(), x) != c.members.end(); };
  for (const auto& [a, b, s] : sums) {
    const auto ia = index(a), ib = index(b), is = index(s);
    if (!in_chain(ia) || !in_chain(ib) || !in_chain(is))
      fail(ErrorKind::BadIndex, "sum " + a + "+" + b + "=" + s + " leaves its chain");
    for (auto key : {std::make_pair(ia, ib), std::make_pair(ib, ia)}) {
      auto [it, fresh] = c.sums.emplace(key, is);
      if (!fresh && it->second != is) fail(ErrorKind::BadIndex, "addition is not commutative at " + a + "+" + b);
    }
  }
  chains_.push_back(std::move(c));
}

std::size_t ApproxIndex::add(std::size_t chain, std::size_t a, std::size_t b) const {
  const auto& sums = chains_.at(chain).sums;
  auto it = sums.find({a, b});
  return it == sums.end() ? max_ : it->second;
}

ApproximationStructure::ApproximationStructure(ApproxIndex index, std::vector<SpecMap> family)
  : index_(std::move(index)), family_(std::move(family)) {
  if (family_.size() != index_.size())
    fail(ErrorKind::LengthMismatch, "approximation family has " + std::to_string(family_.size()) + " maps for " +
                                        std::to_string(index_.size()) + " index elements");
  for (const auto& f : family_) {
    if (!f.is_endomorphism()) fail(ErrorKind::NotEndomorphism, "approximation maps must be endomorphisms");
    require_same_space(f.source(), family_.front().source(), "approximation family");
  }
}

StructureReport verify_structure(const ApproximationStructure& s) {
  StructureReport out;
  const auto& ix = s.index();
  const auto& sp = s.space();
  std::string w;
  for (std::size_t e = 0; e < ix.size() && w.empty(); ++e)
    if (!is_inflating(s.at(e))) w = "·^" + ix.label(e) + " is not inflating";
  out.report.add("inflating", w.empty(), w);

  w.clear();
  for (std::size_t a = 0; a < ix.size() && w.empty(); ++a)
    for (std::size_t b = 0; b < ix.size() && w.empty(); ++b)
      if (ix.leq(a, b))
        for (std::size_t o = 0; o < sp.size() && w.empty(); ++o)
          if ((s.at(a).image(o) & ~s.at(b).image(o)) != 0)
            w = "{" + sp.label(o) + "}^" + ix.label(a) + " not inside {" + sp.label(o) + "}^" + ix.label(b);
  out.report.add("monotone", w.empty(), w);

  w.clear();
  for (std::size_t o = 0; o < sp.size() && w.empty(); ++o)
    if (s.at(ix.max()).image(o) != sp.all())
      w = "{" + sp.label(o) + "}^" + ix.label(ix.max()) + " = " + sp.format(s.at(ix.max()).image(o));
  out.report.add("saturating", w.empty(), w);

  if (auto z = ix.zero()) out.attainable = s.at(*z) == SpecMap::identity(sp);
  return out;
}

Specification approximate(const ApproximationStructure& s, const Specification& v, std::size_t eps) {
  require_same_space(s.space(), v.space(), "approximate");
  if (eps >= s.index().size()) fail(ErrorKind::UnknownIndex, "approximation index out of range");
  return apply(s.at(eps), v);
}

Specification approximate(const ApproximationStructure& s, const Specification& v, const std::string& eps) {
  return approximate(s, v, s.index().index(eps));
}

Report check_triangle(const ApproximationStructure& s, std::uint64_t seed, std::size_t samples) {
  const auto& ix = s.index();
  if (ix.chains().empty()) fail(ErrorKind::NoChainsDeclared, "no chains with addition declared");
  const auto& sp = s.space();
  Report r;
  std::string w;
  for (std::size_t k = 0; k < ix.chains().size() && w.empty(); ++k)
    for (auto a : ix.chains()[k].members)
      for (auto b : ix.chains()[k].members) {
        const std::size_t sum = ix.add(k, a, b);
        for (std::size_t o = 0; o < sp.size() && w.empty(); ++o) {
          const StateMask twice = s.at(b).apply_mask(s.at(a).image(o));
          if ((twice & ~s.at(sum).image(o)) != 0)
            w = "({" + sp.label(o) + "}^" + ix.label(a) + ")^" + ix.label(b) + " = " + sp.format(twice) +
                " not inside ^" + ix.label(sum);
        }
      }
  r.add("triangle inequality", w.empty(), w);

  std::mt19937_64 rng(seed);
  w.clear();
  for (std::size_t n = 0; n < samples && w.empty(); ++n) {
    const std::size_t k = rng() % ix.chains().size();
    const auto& m = ix.chains()[k].members;
    const std::size_t a = m[rng() % m.size()], b = m[rng() % m.size()];
    const StateMask wm = random_subset(rng, sp.all());
    const StateMask vm = random_subset(rng, s.at(a).apply_mask(wm));
    const StateMask tm = random_subset(rng, s.at(b).apply_mask(vm));
    if ((tm & ~s.at(ix.add(k, a, b)).apply_mask(wm)) != 0)
      w = "W=" + sp.format(wm) + " V=" + sp.format(vm) + " Ṽ=" + sp.format(tm);
  }
  r.add("chained inclusion (" + std::to_string(samples) + " samples, seed " + std::to_string(seed) + ")", w.empty(), w);
  return r;
}

std::vector<Specification> approximation_space(const ApproximationStructure& s) {
  std::vector<StateMask> masks;
  for (const auto& f : s.family())
    for (auto m : f.table()) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](StateMask a, StateMask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Specification> out;
  for (auto m : masks) out.emplace_back(s.space(), m);
  return out;
}

Report is_stable(const ResourceTheory& t, const ApproximationStructure& s) {
  require_same_space(t.space(), s.space(), "is_stable");
  const auto& els = t.monoid().elements();
  const auto& sp = s.space();
  const std::size_t ne = s.index().size();
  auto ok = [&](std::size_t k) {
    const auto& f = els[k];
    for (std::size_t e = 0; e < ne; ++e)
      for (std::size_t o = 0; o < sp.size(); ++o)
        if ((f.apply_mask(s.at(e).image(o)) & ~s.at(e).apply_mask(f.image(o))) != 0) return false;
    return true;
  };
  auto miss = kernels::first_failure(els.size(), ok);
  std::string w;
  if (miss) {
    const auto& f = els[*miss];
    for (std::size_t e = 0; e < ne && w.empty(); ++e)
      for (std::size_t o = 0; o < sp.size() && w.empty(); ++o)
        if ((f.apply_mask(s.at(e).image(o)) & ~s.at(e).apply_mask(f.image(o))) != 0)
          w = t.monoid().name(*miss) + " at {" + sp.label(o) + "}, ε=" + s.index().label(e);
  }
  Report r;
  r.add("f(V^ε) ⊆ f(V)^ε", !miss, w);
  return r;
}

bool is_robust(const ResourceTheory& t, const ApproximationStructure& s, const Specification& v, std::size_t eps) {
  require_same_space(t.space(), s.space(), "is_robust");
  return !is_free(t, approximate(s, v, eps));
}

ApproximationStructure reduce_structure(const ApproximationStructure& s, const GaloisInsertion& ins) {
  require_same_space(s.space(), ins.big(), "reduce_structure");
  std::vector<SpecMap> fam;
  for (const auto& f : s.family()) fam.push_back(compose(ins.h(), compose(f, ins.e())));
  return {s.index(), std::move(fam)};
}

bool preserves_approximations(const ApproximationStructure& s, const GaloisInsertion& ins) {
  require_same_space(s.space(), ins.big(), "preserves_approximations");
  const SpecMap lam = ins.lumping_map();
  for (const auto& f : s.family()) {
    const SpecMap hf = compose(ins.h(), f);
    if (!(hf == compose(hf, lam))) return false;
  }
  return true;
}

} // namespace rtk
