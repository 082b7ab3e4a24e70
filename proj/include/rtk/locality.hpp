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
 * Subsystems of transformations.
 *
 * A subsystem is a subset of a parent monoid. Its commutant collects the
 * parent elements commuting with all of it; complete subsystems equal their
 * bicommutant and form a bounded lattice. Independent complete subsystems
 * induce local agents through the lumpings they generate.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtk/element_set.hpp"
#include "rtk/embed.hpp"
#include "rtk/report.hpp"
#include "rtk/theory.hpp"

namespace rtk {

class Subsystem {
public:
  Subsystem(TransformationMonoid parent, ElementSet members);

  const TransformationMonoid& parent() const { return parent_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const SpecMap& f) const;
  std::vector<SpecMap> maps() const;

  /// Contains the identity and is closed under composition.
  bool is_submonoid() const;
  /// The members as a monoid of their own, keeping the parent's names.
  TransformationMonoid as_monoid() const;
  /// "{id,flip1,...}" using parent names.
  std::string describe() const;

  friend bool operator==(const Subsystem& a, const Subsystem& b) { return a.members_ == b.members_; }

private:
  TransformationMonoid parent_;
  ElementSet members_;
};

/// Throws NotInMonoid for maps outside t.
Subsystem subsystem_of(const TransformationMonoid& t, const std::vector<SpecMap>& maps);
Subsystem whole(const TransformationMonoid& t);

Subsystem commutant(const Subsystem& a);
Subsystem bicommutant(const Subsystem& a);
bool is_complete(const Subsystem& a);

/// Both throw NotComplete for incomplete arguments.
Subsystem join(const Subsystem& a, const Subsystem& b);
Subsystem meet(const Subsystem& a, const Subsystem& b);

struct SubsystemLattice {
  std::vector<Subsystem> nodes;
  /// leq[i][j]: nodes[i] ⊆ nodes[j].
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::size_t>> join_table;
  std::vector<std::vector<std::size_t>> meet_table;
  std::size_t bottom = 0;
  std::size_t top = 0;
};

/// Completes every seed (or every singleton when `seeds` is empty), adds the
/// bounds and closes under join and meet. The result may be a proper part of
/// all complete subsystems. Nodes are ordered by size, then by members.
/// Throws CapExceeded beyond `cap` nodes.
SubsystemLattice enumerate_complete(const TransformationMonoid& t,
                                    const std::vector<std::vector<SpecMap>>& seeds = {},
                                    std::size_t cap = 4096);

inline constexpr std::size_t kExhaustiveAssociativity = 400;
inline constexpr std::size_t kAssociativitySamples = 2000000;

/// Lattice laws over every node pair. Associativity runs over every triple up
/// to kExhaustiveAssociativity nodes and over seeded random triples beyond.
Report verify_lattice(const SubsystemLattice& lattice, std::uint64_t seed = 0);

Subsystem centre(const Subsystem& a);
bool is_centreless(const Subsystem& a);
/// Throws NotSubmonoid when either side is not a submonoid.
bool are_independent(const Subsystem& a, const Subsystem& b);

/// Joins {ω′ : f({ω′}) ⊆ f({ω})} over f in `a` and squares to idempotence.
GeneratedLumping generated_lumping(const Subsystem& a);

struct Agents {
  Subsystem a;
  Subsystem b;
  GaloisInsertion ins_a;
  GaloisInsertion ins_b;
  ResourceTheory theory_a;
  ResourceTheory theory_b;
  /// h_A∘f_B∘e_A(V) ⊆ V and the symmetric condition.
  Report certificate;
};

/// Requires complete independent a and b (NotComplete, NotIndependent).
/// Each agent sees the space reduced by the lumping its commutant generates.
Agents derive_agents(const Subsystem& a, const Subsystem& b);

/// h_A∘f∘e_A({σ}) ⊆ {σ} for every f and σ.
bool embedding_independent_of(const GaloisInsertion& ins, const std::vector<SpecMap>& maps,
                              std::string* witness = nullptr);

struct Compatibility {
  bool compatible = false;
  bool realizable = false;
  bool composable = false;
  std::string witness;
  bool verdict() const { return compatible; }
};

/// The three equivalent free-composition conditions. Throws
/// InternalInconsistency if they disagree, TooLarge beyond 16 global or
/// 10 local states.
Compatibility check_compatibility(const GaloisInsertion& ins_a, const GaloisInsertion& ins_b);

struct FreeComposition {
  /// For all V, W some X and f ∈ A′, g ∈ B′ give f(V) = f(X), g(W) = g(X).
  bool condition = false;
  std::string witness;
  /// Only filled when the condition holds: Λ_A∘Λ_B and Λ_B∘Λ_A send every
  /// specification to Ω, with Λ the lumping generated by the commutant.
  Report conclusion;
};

/// Exhaustive over every pair of specifications. Requires complete a and b;
/// TooLarge above six states.
FreeComposition check_freely_composable(const Subsystem& a, const Subsystem& b);

/// f(e_A(V_A) ∩ W) = e_A(V_A) ∩ f(W). Throws NotIndependent when the
/// embedding depends on f, IncompatibleW when e_A(V_A) ∩ W = ∅.
Report check_independent_processing(const GaloisInsertion& ins_a, const SpecMap& f_b, const Specification& v_a,
                                    const Specification& w);

/// f_A∘g_B(V) ⊆ e_A f̃_A h_A(V) ∩ e_B g̃_B h_B(V).
Report check_agents_theorem(const Agents& agents, const SpecMap& f_a, const SpecMap& g_b, const Specification& v);
/// The same inclusion over every f_A, g_B and every V.
Report check_agents_theorem_all(const Agents& agents);

/// {A ∩ T : A complete in M}, deduplicated. Throws NotSubtheory unless T ⊆ M.
std::vector<Subsystem> inherited_subsystems(const TransformationMonoid& t, const TransformationMonoid& m,
                                            const std::vector<std::vector<SpecMap>>& seeds = {});

/// (f_A, f_B) pairs.
using SubsystemIso = std::vector<std::pair<SpecMap, SpecMap>>;

/// Checks the swap laws of u, u_inv for identical independent a, b. Throws
/// NotIsomorphism, NotInJoin, NotComplete or NotIndependent on bad input.
Report verify_swap(const Subsystem& a, const Subsystem& b, const SubsystemIso& iso, const SpecMap& u,
                   const SpecMap& u_inv);

struct Copy {
  Specification spec;
  /// Fixed by u∘Λ_A∘u⁻¹.
  bool local_in_target;
};

/// u(e_A(V_A)).
Copy copy_spec(const GaloisInsertion& ins_a, const SpecMap& u, const SpecMap& u_inv, const Specification& v_a);

/// ⋂_i u_i(e_A(V_A)); Ω for no swaps. Throws Incompatible naming the clash.
Specification n_copies(const GaloisInsertion& ins_a, const Specification& v_a, const std::vector<SpecMap>& swaps);

} // namespace rtk
