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
 * Seeded property suites. Each returns a Report whose check names carry the
 * instance counts, so two runs with the same seed print identical text.
 */

#pragma once

#include <cstddef>
#include <cstdint>

#include "rtk/report.hpp"

namespace rtk::laws {

/// Reflexivity, transitivity, V→Z ⇒ V∩W→Z, and agreement with the oracle.
Report preorder(std::uint64_t seed, std::size_t theories = 500, std::size_t queries = 8);

/// Partition lumpings give verified insertions with Λ = e∘h.
Report lumpings(std::uint64_t seed, std::size_t count = 200);

/// Both factor orders reproduce e, with factor kinds confirmed by classification.
Report decompositions(std::uint64_t seed, std::size_t count = 100);

/// The three free-composition conditions agree.
Report free_composition(std::uint64_t seed, std::size_t count = 200);

/// Under a stable theory, V→W and W robust imply V robust. The converse
/// form is counted separately and reported as an informational check.
Report robustness(std::uint64_t seed, std::size_t count = 200);

/// Nested against direct sums, then the five mixture identities.
Report mixtures(std::uint64_t seed, std::size_t count = 1000);

/// Hull of a mixture equals the mixture of extreme points; simplex
/// membership agrees with the oracle.
Report hulls(std::uint64_t seed, std::size_t count = 200);

/// Every suite above with its default sizes, prefixed by the suite name.
Report all(std::uint64_t seed);

} // namespace rtk::laws
