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
 * Slow serial reference implementations. They share only the data types with
 * the optimized paths and exist to cross-check them on small inputs.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "rtk/convex.hpp"
#include "rtk/theory.hpp"

namespace rtk::oracle {

/// Plain scan over the elements, comparing member by member. TooLarge above six states.
ReachWitness reaches(const ResourceTheory& t, const Specification& v, const Specification& w);

/// Indices of elements commuting with every map in `a`, compared state by
/// state on explicit image sets. TooLarge above 4096 elements.
std::vector<std::size_t> commutant(const TransformationMonoid& t, const std::vector<SpecMap>& a);

/// Interval test in one dimension, triangle and segment solves in two.
/// TooLarge above two dimensions or six points.
bool hull_contains(const PointSpec& v, const RationalPoint& x);

} // namespace rtk::oracle
