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
 * Stock models (bit strings, full function monoids, Hamming balls) and seeded
 * random generators used by the property checks.
 */

#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "rtk/approx.hpp"
#include "rtk/convex.hpp"
#include "rtk/embed.hpp"
#include "rtk/theory.hpp"

namespace rtk::models {

using Rng = std::mt19937_64;

/// Labels "00", "01", ... in binary order; bit 1 is the leftmost character.
StateSpace bit_strings(std::size_t bits);

/// Every deterministic endomorphism, ordered by their tables. TooLarge beyond 10^6.
std::vector<SpecMap> all_deterministic_maps(const StateSpace& space);
/// Every permutation of the states. TooLarge above 8 states.
std::vector<SpecMap> all_permutations(const StateSpace& space);

/// The four maps acting on bit k (1-based) alone: identity, flip, set to 0, set to 1.
std::vector<SpecMap> bit_maps(std::size_t bits, std::size_t k);
/// Names matching bit_maps: id, flipK, setK0, setK1.
std::vector<std::string> bit_map_names(std::size_t k);

/// Exchanges bits i and j (1-based).
SpecMap exchange_bits(std::size_t bits, std::size_t i, std::size_t j);

/// Λ({ω}) = states agreeing with ω on the first k bits.
Lumping prefix_lumping(std::size_t bits, std::size_t k);

/// Hamming balls of radius 0..bits with saturating addition on the chain.
ApproximationStructure hamming_structure(std::size_t bits);

/// Random theory on 1..max_states states with at most max_elements elements.
ResourceTheory random_theory(Rng& rng, std::size_t max_states = 5, std::size_t max_elements = 20);
/// Uniform nonempty specification.
Specification random_spec(Rng& rng, const StateSpace& space);
/// Random map, deterministic with probability 1/2.
SpecMap random_map(Rng& rng, const StateSpace& space);
/// Random partition of the space, as a lumping.
Lumping random_partition_lumping(Rng& rng, const StateSpace& space);
/// Random embedding with pairwise disjoint singleton images into a target of
/// at most max_target states; source and target spaces are fresh.
SpecMap random_embedding(Rng& rng, std::size_t max_target = 5);
/// Random exact rational in [0,1] with denominators up to `den`.
Rational random_probability(Rng& rng, int den = 12);
/// Random distribution of the given length.
Distribution random_distribution(Rng& rng, std::size_t n, int den = 12);
/// Random point with coordinates in [-4,4] of denominator up to 6.
RationalPoint random_point(Rng& rng, std::size_t dim);

} // namespace rtk::models
