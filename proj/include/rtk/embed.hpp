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
 * Embeddings between specification spaces.
 *
 * A lumping is an idempotent inflating endomorphism; it coarse-grains a space.
 * A Galois insertion (e, h) connects a small space to a big one with h∘e = id
 * and Z ⊆ e(V) ⇔ h(Z) ⊆ V. Partition lumpings and insertions determine each
 * other through Λ = e∘h.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtk/report.hpp"
#include "rtk/spec.hpp"
#include "rtk/theory.hpp"

namespace rtk {

Report verify_lumping(const SpecMap& f);

class Lumping {
public:
  /// Throws NotEndomorphism, or NotLumping naming the first violation.
  explicit Lumping(SpecMap map);

  const SpecMap& map() const { return map_; }
  const StateSpace& space() const { return map_.source(); }
  /// Λ(ω′) = Λ(ω) whenever ω′ ∈ Λ(ω).
  bool is_partition() const;

  static Lumping identity(const StateSpace& space) { return Lumping(SpecMap::identity(space)); }

private:
  SpecMap map_;
};

/// Adjoint pair between e.source() (small) and e.target() (big).
class GaloisInsertion {
public:
  /// Shapes only: e small→big, h big→small. Use verify_insertion for the laws.
  GaloisInsertion(SpecMap e, SpecMap h);

  const StateSpace& small() const { return e_.source(); }
  const StateSpace& big() const { return e_.target(); }
  const SpecMap& e() const { return e_; }
  const SpecMap& h() const { return h_; }
  /// e∘h.
  SpecMap lumping_map() const { return compose(e_, h_); }

  static GaloisInsertion identity(const StateSpace& space) {
    return {SpecMap::identity(space), SpecMap::identity(space)};
  }

private:
  SpecMap e_;
  SpecMap h_;
};

/// Throws NotPartitionLumping when some class is not an equivalence class.
GaloisInsertion insertion_from_lumping(const Lumping& lumping);

/// Adjunction pairs are enumerated when |small| ≤ 5 and |big| ≤ 12 and
/// sampled 10 000 times with `seed` otherwise.
Report verify_insertion(const GaloisInsertion& ins, std::uint64_t seed = 0);

/// e(V) ⊆ e(W) ⇔ V ⊆ W, decided by e({ω}) ⊄ ⋃_{ω′≠ω} e({ω′}).
bool is_order_embedding(const SpecMap& e);

enum class EmbeddingKind { Extensive, Intensive, General };
std::string to_string(EmbeddingKind kind);

struct Embedding {
  SpecMap e;
  EmbeddingKind kind;
  std::optional<SpecMap> adjoint;
};

/// Throws NotOrderEmbedding.
Embedding classify_embedding(const SpecMap& e);

enum class FactorOrder { ExtensiveAfterIntensive, IntensiveAfterExtensive };

struct Decomposition {
  StateSpace middle;
  SpecMap extensive;
  SpecMap intensive;
  FactorOrder order;
  /// The product of the two factors in `order`.
  SpecMap product() const;
};

/// Factors e into an extensive and an intensive embedding. Throws
/// NotOrderEmbedding, or NotDecomposable when singleton images overlap.
Decomposition decompose_embedding(const SpecMap& e, FactorOrder order = FactorOrder::ExtensiveAfterIntensive);

/// inner: A→AB, outer: AB→ABC; returns (outer.e∘inner.e, inner.h∘outer.h).
/// Throws NotIntensive if an input fails verify_insertion.
GaloisInsertion nest_compose(const GaloisInsertion& inner, const GaloisInsertion& outer);

/// to_a: A→ABC, to_ab: AB→ABC; returns the insertion of A into AB.
/// Throws LumpingOrderViolated unless Λ_AB(ω) ⊆ Λ_A(ω) for all ω.
GaloisInsertion nest_middle(const GaloisInsertion& to_a, const GaloisInsertion& to_ab);

/// Λ(V) = V.
bool is_local(const Lumping& lumping, const Specification& v);

/// Theory on the small space generated by h∘f∘e for f in `agent`.
/// Throws NotSubmonoid unless agent ⊆ t.
ResourceTheory restrict_theory(const ResourceTheory& t, const TransformationMonoid& agent,
                               const GaloisInsertion& ins);

/// Theory generated by V ↦ h(f(e(V) ∩ K)). Throws IncompatibleSideResource
/// unless h(K) = Ω_small, EmptyIntersection if e({σ}) ∩ K = ∅.
ResourceTheory effective_theory(const ResourceTheory& t, const TransformationMonoid& agent,
                                const GaloisInsertion& ins, const Specification& side);

struct GeneratedLumping {
  Lumping lumping;
  /// Squarings applied before the join became idempotent.
  std::size_t iterations;
};

/// Joins the classes {ω′ : f(ω′) = f(ω)} over all maps, then squares until idempotent.
GeneratedLumping lumping_from_maps(const StateSpace& space, const std::vector<SpecMap>& maps);

/// Squares an inflating table until it is idempotent.
GeneratedLumping saturate_lumping(const StateSpace& space, std::vector<StateMask> table);

} // namespace rtk
