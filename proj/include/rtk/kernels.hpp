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
 * Data-parallel inner loops shared by the algebra modules. Every kernel is
 * deterministic regardless of thread count: searches reduce to the smallest
 * matching index and set-valued results are written per row. The serial
 * reference implementations these are checked against live in oracle.hpp.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rtk/element_set.hpp"
#include "rtk/spec.hpp"

namespace rtk::kernels {

/// Number of worker threads the kernels will use (1 without OpenMP).
int thread_count();

/// Smallest i with maps[i](from) ⊆ to.
std::optional<std::size_t> first_reaching(std::span<const SpecMap> maps, StateMask from, StateMask to);

/// rows[i] = { j : maps[i] ∘ maps[j] = maps[j] ∘ maps[i] }.
std::vector<ElementSet> commutation_rows(std::span<const SpecMap> maps);

/// Smallest i in [0, n) with ok(i) == false, or nullopt when all pass.
/// `ok` must be safe to call concurrently.
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok);

} // namespace rtk::kernels
