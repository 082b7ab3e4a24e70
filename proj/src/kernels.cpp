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

#include "rtk/kernels.hpp"

#include <limits>

#ifdef RTK_WITH_OPENMP
#include <omp.h>
#endif

namespace rtk::kernels {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool commute(const SpecMap& f, const SpecMap& g) {
  const auto& tf = f.table();
  const auto& tg = g.table();
  for (std::size_t s = 0; s < tf.size(); ++s) {
    StateMask fg = 0, gf = 0;
    for_each_bit(tg[s], [&](std::size_t i) { fg |= tf[i]; });
    for_each_bit(tf[s], [&](std::size_t i) { gf |= tg[i]; });
    if (fg != gf) return false;
  }
  return true;
}

} // namespace

int thread_count() {
#ifdef RTK_WITH_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::optional<std::size_t> first_reaching(std::span<const SpecMap> maps, StateMask from, StateMask to) {
  std::size_t best = kNone;
  const auto n = static_cast<std::ptrdiff_t>(maps.size());
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k < best && (maps[k].apply_mask(from) & ~to) == 0) best = k;
  }
  if (best == kNone) return std::nullopt;
  return best;
}

std::vector<ElementSet> commutation_rows(std::span<const SpecMap> maps) {
  const std::size_t n = maps.size();
  std::vector<ElementSet> rows(n, ElementSet(n));
  // Upper triangle in parallel, mirrored afterwards so rows are only ever
  // written by the thread that owns them.
  std::vector<std::vector<std::size_t>> upper(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i; j < n; ++j)
      if (commute(maps[i], maps[j])) upper[i].push_back(j);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : upper[i]) {
      rows[i].insert(j);
      rows[j].insert(i);
    }
  return rows;
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& ok) {
  std::size_t best = kNone;
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for reduction(min : best) schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < sn; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k < best && !ok(k)) best = k;
  }
  if (best == kNone) return std::nullopt;
  return best;
}

} // namespace rtk::kernels
