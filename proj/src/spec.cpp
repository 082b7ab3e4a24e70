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

#include "rtk/spec.hpp"

#include <unordered_map>

namespace rtk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::EmptySpecification: return "EmptySpecification";
  case ErrorKind::UnknownState: return "UnknownState";
  case ErrorKind::DuplicateState: return "DuplicateState";
  case ErrorKind::TooManyStates: return "TooManyStates";
  case ErrorKind::Incompatible: return "Incompatible";
  case ErrorKind::SpaceMismatch: return "SpaceMismatch";
  case ErrorKind::NotEndomorphism: return "NotEndomorphism";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::NotLumping: return "NotLumping";
  case ErrorKind::NotPartitionLumping: return "NotPartitionLumping";
  case ErrorKind::NotOrderEmbedding: return "NotOrderEmbedding";
  case ErrorKind::NotDecomposable: return "NotDecomposable";
  case ErrorKind::NotIntensive: return "NotIntensive";
  case ErrorKind::LumpingOrderViolated: return "LumpingOrderViolated";
  case ErrorKind::NotSubmonoid: return "NotSubmonoid";
  case ErrorKind::NotInMonoid: return "NotInMonoid";
  case ErrorKind::NotComplete: return "NotComplete";
  case ErrorKind::NotIndependent: return "NotIndependent";
  case ErrorKind::NotSubtheory: return "NotSubtheory";
  case ErrorKind::NotIsomorphism: return "NotIsomorphism";
  case ErrorKind::NotInJoin: return "NotInJoin";
  case ErrorKind::IncompatibleSideResource: return "IncompatibleSideResource";
  case ErrorKind::EmptyIntersection: return "EmptyIntersection";
  case ErrorKind::IncompatibleW: return "IncompatibleW";
  case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  case ErrorKind::UnknownIndex: return "UnknownIndex";
  case ErrorKind::BadIndex: return "BadIndex";
  case ErrorKind::NoChainsDeclared: return "NoChainsDeclared";
  case ErrorKind::BadProbability: return "BadProbability";
  case ErrorKind::DimMismatch: return "DimMismatch";
  case ErrorKind::LengthMismatch: return "LengthMismatch";
  case ErrorKind::UndefinedPoint: return "UndefinedPoint";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::DuplicateName: return "DuplicateName";
  case ErrorKind::UnknownReference: return "UnknownReference";
  case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

StateSpace::StateSpace(std::vector<std::string> labels) {
  if (labels.empty()) fail(ErrorKind::EmptySpecification, "a state space needs at least one state");
  if (labels.size() > kMaxStates)
    fail(ErrorKind::TooManyStates,
         std::to_string(labels.size()) + " states exceed the limit of " + std::to_string(kMaxStates));
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) fail(ErrorKind::UnknownState, "state labels must be nonempty");
    if (!impl->index.emplace(labels[i], i).second)
      fail(ErrorKind::DuplicateState, "state '" + labels[i] + "' listed twice");
  }
  impl->labels = std::move(labels);
  impl_ = std::move(impl);
}

std::optional<std::size_t> StateSpace::find(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t StateSpace::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorKind::UnknownState, "no state named '" + std::string(label) + "'");
}

bool operator==(const StateSpace& a, const StateSpace& b) {
  return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
}

std::string StateSpace::format(StateMask m) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) out += ',';
    out += i < size() ? label(i) : "?" + std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

void require_same_space(const StateSpace& a, const StateSpace& b, std::string_view what) {
  if (!(a == b)) fail(ErrorKind::SpaceMismatch, std::string(what) + ": state spaces differ");
}

Specification::Specification(StateSpace space, StateMask members)
  : space_(std::move(space)), members_(members) {
  if (members_ == 0) fail(ErrorKind::EmptySpecification, "specifications must be nonempty");
  if ((members_ & ~space_.all()) != 0)
    fail(ErrorKind::UnknownState, "specification mentions states outside its space");
}

std::vector<std::size_t> Specification::members() const {
  std::vector<std::size_t> out;
  for_each_bit(members_, [&](std::size_t i) { out.push_back(i); });
  return out;
}

bool Specification::subset_of(const Specification& other) const {
  require_same_space(space_, other.space_, "subset test");
  return (members_ & ~other.members_) == 0;
}

Specification make_spec(const StateSpace& space, const std::vector<std::string>& names) {
  if (names.empty()) fail(ErrorKind::EmptySpecification, "no states named");
  StateMask m = 0;
  for (const auto& n : names) m |= bit(space.index(n));
  return {space, m};
}

Specification combine(const Specification& v, const Specification& w) {
  require_same_space(v.space(), w.space(), "combine");
  const StateMask m = v.mask() & w.mask();
  if (m == 0) fail(ErrorKind::Incompatible, v.to_string() + " and " + w.to_string() + " contradict");
  return {v.space(), m};
}

Specification forget(const Specification& v, const Specification& w) {
  require_same_space(v.space(), w.space(), "forget");
  return {v.space(), v.mask() | w.mask()};
}

SpecMap::SpecMap(StateSpace source, StateSpace target, std::vector<StateMask> table)
  : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_.size())
    fail(ErrorKind::SpaceMismatch, "map table has " + std::to_string(table_.size()) +
                                       " entries for " + std::to_string(source_.size()) + " states");
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == 0)
      fail(ErrorKind::EmptySpecification, "image of '" + source_.label(i) + "' is empty");
    if ((table_[i] & ~target_.all()) != 0)
      fail(ErrorKind::UnknownState, "image of '" + source_.label(i) + "' leaves the target space");
  }
}

SpecMap SpecMap::identity(const StateSpace& space) {
  std::vector<StateMask> t(space.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = bit(i);
  return {space, space, std::move(t)};
}

SpecMap SpecMap::from_function(const StateSpace& source, const StateSpace& target,
                               const std::function<std::size_t(std::size_t)>& f) {
  std::vector<StateMask> t(source.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t j = f(i);
    if (j >= target.size()) fail(ErrorKind::UnknownState, "state function leaves the target space");
    t[i] = bit(j);
  }
  return {source, target, std::move(t)};
}

SpecMap SpecMap::constant(const StateSpace& source, const Specification& image) {
  return {source, image.space(), std::vector<StateMask>(source.size(), image.mask())};
}

bool SpecMap::is_deterministic() const {
  for (auto m : table_)
    if (popcount(m) != 1) return false;
  return true;
}

std::size_t SpecMap::hash() const {
  // FNV-1a over the table words; spaces are compared separately on equality.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto m : table_) {
    h ^= m;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string SpecMap::describe() const {
  std::string out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out += ' ';
    out += source_.label(i) + "->" + target_.format(table_[i]);
  }
  return out;
}

Specification apply(const SpecMap& f, const Specification& v) {
  require_same_space(f.source(), v.space(), "apply");
  return {f.target(), f.apply_mask(v.mask())};
}

SpecMap compose(const SpecMap& f, const SpecMap& g) {
  require_same_space(g.target(), f.source(), "compose");
  std::vector<StateMask> t(g.source().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f.apply_mask(g.image(i));
  return {g.source(), f.target(), std::move(t)};
}

bool maps_equal(const SpecMap& f, const SpecMap& g) {
  require_same_space(f.source(), g.source(), "map comparison (source)");
  require_same_space(f.target(), g.target(), "map comparison (target)");
  return f.table() == g.table();
}

bool is_inflating(const SpecMap& f) {
  if (!f.is_endomorphism()) fail(ErrorKind::NotEndomorphism, "inflation is defined for endomorphisms");
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if ((f.image(i) & bit(i)) == 0) return false;
  return true;
}

std::vector<StateMask> all_masks(std::size_t n) {
  if (n > 24) fail(ErrorKind::TooLarge, "refusing to enumerate 2^" + std::to_string(n) + " specifications");
  std::vector<StateMask> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (StateMask m = 1; m <= low_bits(n); ++m) out.push_back(m);
  return out;
}

} // namespace rtk
