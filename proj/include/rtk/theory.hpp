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

/*
 * Resource theories: a specification space together with a finite monoid of
 * allowed transformations. V reaches W when some allowed f has f(V) ⊆ W.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rtk/element_set.hpp"
#include "rtk/spec.hpp"

namespace rtk {

inline constexpr std::size_t kDefaultMonoidCap = 100000;

/// kDefaultMonoidCap unless RTK_CAP holds a positive integer.
std::size_t default_monoid_cap();

/// A finite composition-closed set of endomorphisms containing the identity.
/// Element 0 is always the identity; the remaining order is the order in
/// which closure discovered them, which fixes witnesses and reports.
class TransformationMonoid {
public:
  const StateSpace& space() const;
  std::size_t size() const;
  const SpecMap& element(std::size_t i) const;
  const std::vector<SpecMap>& elements() const;
  /// "id", a generator name, or a product such as "f*g" (f after g).
  const std::string& name(std::size_t i) const;

  std::optional<std::size_t> find(const SpecMap& f) const;
  /// Throws NotInMonoid.
  std::size_t index_of(const SpecMap& f) const;
  bool contains(const SpecMap& f) const { return find(f).has_value(); }

  ElementSet all() const { return ElementSet::all(size()); }
  ElementSet set_of(const std::vector<SpecMap>& maps) const;

  /// commutation()[i] holds every j whose element commutes with element i.
  /// Computed once on first use; safe to call concurrently.
  const std::vector<ElementSet>& commutation() const;

  friend TransformationMonoid close_monoid(const StateSpace&, const std::vector<SpecMap>&, std::size_t,
                                           const std::vector<std::string>&);

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Least monoid containing `generators`. Optional names label generators
/// (default g0, g1, ...). Throws CapExceeded once more than `cap` distinct
/// elements appear, SpaceMismatch for foreign generators.
TransformationMonoid close_monoid(const StateSpace& space, const std::vector<SpecMap>& generators,
                                  std::size_t cap = default_monoid_cap(),
                                  const std::vector<std::string>& names = {});

/// Same element sets, regardless of order.
bool same_elements(const TransformationMonoid& a, const TransformationMonoid& b);

class ResourceTheory {
public:
  explicit ResourceTheory(TransformationMonoid monoid) : monoid_(std::move(monoid)) {}
  const StateSpace& space() const { return monoid_.space(); }
  const TransformationMonoid& monoid() const { return monoid_; }

private:
  TransformationMonoid monoid_;
};

struct ReachWitness {
  bool found = false;
  std::optional<std::size_t> index;
  std::optional<SpecMap> map;
  std::string name;
};

ReachWitness reaches(const ResourceTheory& t, const Specification& v, const Specification& w);

/// Ω → V.
bool is_free(const ResourceTheory& t, const Specification& v);

/// Mutual-convertibility classes of a candidate list and the order between them.
struct Quotient {
  /// Candidates with duplicates dropped and Ω appended when missing.
  std::vector<Specification> specs;
  std::vector<std::size_t> class_of;
  /// Members of each class as indices into specs, classes ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  /// reach[i][j]: members of class i reach members of class j.
  std::vector<std::vector<bool>> reach;
  std::size_t top_class = 0;
};

Quotient quotient(const ResourceTheory& t, const std::vector<Specification>& candidates);
/// Every nonempty specification; TooLarge above five states.
Quotient quotient_all(const ResourceTheory& t);

/// f(V) = V for every allowed f.
bool is_conserved(const ResourceTheory& t, const Specification& v);

struct ResourceIndependentMap {
  std::size_t index;
  SpecMap map;
  Specification value;
};

/// Elements whose output ignores the input, each with its constant value.
std::vector<ResourceIndependentMap> resource_independent_maps(const ResourceTheory& t);

/// Theory whose monoid is the intersection of both monoids.
ResourceTheory combine_theories(const ResourceTheory& t, const ResourceTheory& f);

} // namespace rtk
