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

#include "rtk/theory.hpp"

#include <cstdlib>
#include <mutex>
#include <unordered_map>

#include "rtk/kernels.hpp"

namespace rtk {

std::size_t default_monoid_cap() {
  if (const char* env = std::getenv("RTK_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMonoidCap;
}

struct TransformationMonoid::Impl {
  explicit Impl(StateSpace s) : space(std::move(s)) {}

  StateSpace space;
  std::vector<SpecMap> elements;
  std::vector<std::string> names;
  std::unordered_map<SpecMap, std::size_t, SpecMapHash> index;

  mutable std::once_flag commutation_once;
  mutable std::vector<ElementSet> commutation;

  bool add(SpecMap f, std::string name) {
    if (index.count(f) != 0) return false;
    index.emplace(f, elements.size());
    elements.push_back(std::move(f));
    names.push_back(std::move(name));
    return true;
  }
};

const StateSpace& TransformationMonoid::space() const { return impl_->space; }
std::size_t TransformationMonoid::size() const { return impl_->elements.size(); }
const SpecMap& TransformationMonoid::element(std::size_t i) const { return impl_->elements.at(i); }
const std::vector<SpecMap>& TransformationMonoid::elements() const { return impl_->elements; }
const std::string& TransformationMonoid::name(std::size_t i) const { return impl_->names.at(i); }

std::optional<std::size_t> TransformationMonoid::find(const SpecMap& f) const {
  auto it = impl_->index.find(f);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t TransformationMonoid::index_of(const SpecMap& f) const {
  if (auto i = find(f)) return *i;
  fail(ErrorKind::NotInMonoid, "map " + f.describe() + " is not in the monoid");
}

ElementSet TransformationMonoid::set_of(const std::vector<SpecMap>& maps) const {
  ElementSet s(size());
  for (const auto& f : maps) s.insert(index_of(f));
  return s;
}

const std::vector<ElementSet>& TransformationMonoid::commutation() const {
  std::call_once(impl_->commutation_once,
                 [this] { impl_->commutation = kernels::commutation_rows(impl_->elements); });
  return impl_->commutation;
}

TransformationMonoid close_monoid(const StateSpace& space, const std::vector<SpecMap>& generators,
                                  std::size_t cap, const std::vector<std::string>& names) {
  if (cap == 0) fail(ErrorKind::CapExceeded, "monoid cap must be positive");
  auto impl = std::make_shared<TransformationMonoid::Impl>(space);
  auto check_cap = [&] {
    if (impl->elements.size() > cap)
      fail(ErrorKind::CapExceeded, "monoid closure exceeded the cap of " + std::to_string(cap) +
                                       " elements (reached " + std::to_string(impl->elements.size()) + ")");
  };
  impl->add(SpecMap::identity(space), "id");
  check_cap();

  std::vector<std::size_t> gen_index;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    require_same_space(g.source(), space, "monoid generator");
    require_same_space(g.target(), space, "monoid generator");
    std::string nm = k < names.size() ? names[k] : "g" + std::to_string(k);
    impl->add(g, std::move(nm));
    check_cap();
    gen_index.push_back(impl->index.at(g));
  }

  // Every element is a word in the generators; left-multiplying each
  // discovered element by every generator reaches all words.
  for (std::size_t k = 0; k < impl->elements.size(); ++k) {
    for (auto gi : gen_index) {
      SpecMap p = compose(impl->elements[gi], impl->elements[k]);
      if (impl->index.count(p) != 0) continue;
      const std::string& rest = impl->names[k];
      std::string nm = impl->names[gi] + (rest == "id" ? std::string() : "*" + rest);
      impl->add(std::move(p), std::move(nm));
      check_cap();
    }
  }

  TransformationMonoid m;
  m.impl_ = std::move(impl);
  return m;
}

bool same_elements(const TransformationMonoid& a, const TransformationMonoid& b) {
  if (!(a.space() == b.space()) || a.size() != b.size()) return false;
  for (const auto& f : a.elements())
    if (!b.contains(f)) return false;
  return true;
}

ReachWitness reaches(const ResourceTheory& t, const Specification& v, const Specification& w) {
  require_same_space(t.space(), v.space(), "reaches (source)");
  require_same_space(t.space(), w.space(), "reaches (target)");
  ReachWitness out;
  const auto& els = t.monoid().elements();
  if (auto i = kernels::first_reaching(els, v.mask(), w.mask())) {
    out.found = true;
    out.index = *i;
    out.map = els[*i];
    out.name = t.monoid().name(*i);
  }
  return out;
}

bool is_free(const ResourceTheory& t, const Specification& v) {
  return reaches(t, Specification::full(t.space()), v).found;
}

Quotient quotient(const ResourceTheory& t, const std::vector<Specification>& candidates) {
  Quotient q;
  for (const auto& c : candidates) {
    require_same_space(t.space(), c.space(), "quotient candidate");
    bool seen = false;
    for (const auto& s : q.specs) seen = seen || s == c;
    if (!seen) q.specs.push_back(c);
  }
  const auto omega = Specification::full(t.space());
  bool has_omega = false;
  for (const auto& s : q.specs) has_omega = has_omega || s.is_full();
  if (!has_omega) q.specs.push_back(omega);

  const std::size_t n = q.specs.size();
  const auto& els = t.monoid().elements();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r[i][j] = kernels::first_reaching(els, q.specs[i].mask(), q.specs[j].mask()).has_value();

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  q.class_of.assign(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (q.class_of[i] != kUnset) continue;
    const std::size_t c = q.classes.size();
    q.classes.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (q.class_of[j] == kUnset && r[i][j] && r[j][i]) {
        q.class_of[j] = c;
        q.classes[c].push_back(j);
      }
  }
  const std::size_t k = q.classes.size();
  q.reach.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) q.reach[a][b] = r[q.classes[a].front()][q.classes[b].front()];
  for (std::size_t i = 0; i < n; ++i)
    if (q.specs[i].is_full()) q.top_class = q.class_of[i];
  return q;
}

Quotient quotient_all(const ResourceTheory& t) {
  if (t.space().size() > 5) fail(ErrorKind::TooLarge, "exhaustive quotient is limited to five states");
  std::vector<Specification> all;
  for (auto m : all_masks(t.space().size())) all.emplace_back(t.space(), m);
  return quotient(t, all);
}

bool is_conserved(const ResourceTheory& t, const Specification& v) {
  require_same_space(t.space(), v.space(), "is_conserved");
  for (const auto& f : t.monoid().elements())
    if (f.apply_mask(v.mask()) != v.mask()) return false;
  return true;
}

std::vector<ResourceIndependentMap> resource_independent_maps(const ResourceTheory& t) {
  std::vector<ResourceIndependentMap> out;
  const auto& els = t.monoid().elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    const auto& tab = els[i].table();
    bool constant = true;
    for (auto m : tab) constant = constant && m == tab.front();
    if (constant) out.push_back({i, els[i], Specification(t.space(), tab.front())});
  }
  return out;
}

ResourceTheory combine_theories(const ResourceTheory& t, const ResourceTheory& f) {
  require_same_space(t.space(), f.space(), "combine_theories");
  std::vector<SpecMap> common;
  std::vector<std::string> names;
  for (std::size_t i = 1; i < t.monoid().size(); ++i)
    if (f.monoid().contains(t.monoid().element(i))) {
      common.push_back(t.monoid().element(i));
      names.push_back(t.monoid().name(i));
    }
  return ResourceTheory(close_monoid(t.space(), common, default_monoid_cap(), names));
}

} // namespace rtk
