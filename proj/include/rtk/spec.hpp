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
 * Finite specification spaces.
 *
 * A state space is an ordered list of distinct labels. A specification is a
 * nonempty subset of a state space, stored as a bit mask over state indices;
 * smaller specifications carry more knowledge. Maps between specification
 * spaces are element-wise: they are given by the image of every singleton and
 * act on larger specifications by union, which makes each of them a
 * join-semilattice homomorphism by construction.
 */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rtk/error.hpp"

namespace rtk {

/// Bit i set <=> state i is a member.
using StateMask = std::uint64_t;

/// Upper bound on the number of states in one space (one mask word).
inline constexpr std::size_t kMaxStates = 64;

inline std::size_t popcount(StateMask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline StateMask bit(std::size_t i) { return StateMask{1} << i; }

inline StateMask low_bits(std::size_t n) {
  return n >= kMaxStates ? ~StateMask{0} : (StateMask{1} << n) - 1;
}

template <typename F>
inline void for_each_bit(StateMask m, F&& f) {
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

class StateSpace {
public:
  explicit StateSpace(std::vector<std::string> labels);

  std::size_t size() const { return impl_->labels.size(); }
  const std::string& label(std::size_t i) const { return impl_->labels.at(i); }
  const std::vector<std::string>& labels() const { return impl_->labels; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownState.
  std::size_t index(std::string_view label) const;

  StateMask all() const { return low_bits(size()); }

  /// Spaces are equal when they carry the same labels in the same order.
  friend bool operator==(const StateSpace& a, const StateSpace& b);

  /// Renders a mask as "{a,b}" in index order.
  std::string format(StateMask m) const;

private:
  struct Impl {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Throws SpaceMismatch with `what` as context when the spaces differ.
void require_same_space(const StateSpace& a, const StateSpace& b, std::string_view what);

class Specification {
public:
  /// Throws EmptySpecification for an empty mask and UnknownState for bits
  /// outside the space.
  Specification(StateSpace space, StateMask members);

  static Specification full(const StateSpace& space) { return {space, space.all()}; }
  static Specification singleton(const StateSpace& space, std::size_t state) {
    return {space, bit(state)};
  }

  const StateSpace& space() const { return space_; }
  StateMask mask() const { return members_; }
  std::size_t count() const { return popcount(members_); }
  bool contains(std::size_t state) const { return state < kMaxStates && ((members_ >> state) & 1U) != 0; }
  bool is_full() const { return members_ == space_.all(); }
  std::vector<std::size_t> members() const;

  /// V ⊆ W; throws SpaceMismatch.
  bool subset_of(const Specification& other) const;

  std::string to_string() const { return space_.format(members_); }

  friend bool operator==(const Specification& a, const Specification& b) {
    return a.members_ == b.members_ && a.space_ == b.space_;
  }

private:
  StateSpace space_;
  StateMask members_;
};

Specification make_spec(const StateSpace& space, const std::vector<std::string>& names);

/// Combined knowledge V ∩ W. Throws Incompatible when the two contradict.
Specification combine(const Specification& v, const Specification& w);

/// Forgetting, V ∪ W.
Specification forget(const Specification& v, const Specification& w);

class SpecMap {
public:
  /// `table[i]` is the image of state i of `source`; every entry must be a
  /// nonempty subset of `target`.
  SpecMap(StateSpace source, StateSpace target, std::vector<StateMask> table);

  static SpecMap identity(const StateSpace& space);
  /// Deterministic map from a state function.
  static SpecMap from_function(const StateSpace& source, const StateSpace& target,
                               const std::function<std::size_t(std::size_t)>& f);
  /// Constant map onto `image`.
  static SpecMap constant(const StateSpace& source, const Specification& image);

  const StateSpace& source() const { return source_; }
  const StateSpace& target() const { return target_; }
  const std::vector<StateMask>& table() const { return table_; }
  StateMask image(std::size_t state) const { return table_[state]; }

  /// Union of the images of the members of `m`; no validation.
  StateMask apply_mask(StateMask m) const {
    StateMask out = 0;
    for_each_bit(m, [&](std::size_t i) { out |= table_[i]; });
    return out;
  }

  bool is_endomorphism() const { return source_ == target_; }
  bool is_deterministic() const;
  std::size_t hash() const;

  /// One line "a->{b} b->{a}".
  std::string describe() const;

  friend bool operator==(const SpecMap& a, const SpecMap& b) {
    return a.table_ == b.table_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

private:
  StateSpace source_;
  StateSpace target_;
  std::vector<StateMask> table_;
};

struct SpecMapHash {
  std::size_t operator()(const SpecMap& f) const { return f.hash(); }
};

Specification apply(const SpecMap& f, const Specification& v);

/// f ∘ g: first g, then f.
SpecMap compose(const SpecMap& f, const SpecMap& g);

/// Equality on singletons, which is equality of maps for element-wise maps.
bool maps_equal(const SpecMap& f, const SpecMap& g);

/// ω ∈ f({ω}) for every state; throws NotEndomorphism.
bool is_inflating(const SpecMap& f);

/// All nonempty masks over an n-state space in increasing numeric order.
std::vector<StateMask> all_masks(std::size_t n);

} // namespace rtk
