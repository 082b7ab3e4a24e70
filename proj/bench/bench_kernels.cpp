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


#include <benchmark/benchmark.h>

#include "rtk/convex.hpp"
#include "rtk/kernels.hpp"
#include "rtk/locality.hpp"
#include "rtk/models.hpp"
#include "rtk/oracle.hpp"

namespace {

using namespace rtk;

const TransformationMonoid& full_two_bits() {
  static const TransformationMonoid t = [] {
    const StateSpace sp = models::bit_strings(2);
    return close_monoid(sp, models::all_deterministic_maps(sp));
  }();
  return t;
}

/// Random three-generator theory on six states plus random spec pairs.
struct ReachCase {
  ResourceTheory t;
  std::vector<std::pair<Specification, Specification>> queries;
};

const ReachCase& reach_case() {
  static const ReachCase c = [] {
    const StateSpace sp({"a", "b", "c", "d", "e", "f"});
    models::Rng rng(1);
    std::vector<SpecMap> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(models::random_map(rng, sp));
    ReachCase out{ResourceTheory(close_monoid(sp, gens)), {}};
    for (int i = 0; i < 64; ++i) out.queries.emplace_back(models::random_spec(rng, sp), models::random_spec(rng, sp));
    return out;
  }();
  return c;
}

void BM_ReachKernel(benchmark::State& state) {
  const auto& c = reach_case();
  for (auto _ : state)
    for (const auto& [v, w] : c.queries) benchmark::DoNotOptimize(reaches(c.t, v, w));
  state.counters["elements"] = static_cast<double>(c.t.monoid().size());
}
BENCHMARK(BM_ReachKernel);

void BM_ReachOracle(benchmark::State& state) {
  const auto& c = reach_case();
  for (auto _ : state)
    for (const auto& [v, w] : c.queries) benchmark::DoNotOptimize(oracle::reaches(c.t, v, w));
}
BENCHMARK(BM_ReachOracle);

void BM_CommutationRows(benchmark::State& state) {
  const auto& t = full_two_bits();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commutation_rows(t.elements()));
  state.counters["threads"] = kernels::thread_count();
}
BENCHMARK(BM_CommutationRows)->Unit(benchmark::kMillisecond);

void BM_CommutantKernel(benchmark::State& state) {
  const auto& t = full_two_bits();
  const auto a = models::bit_maps(2, 1);
  t.commutation();
  for (auto _ : state) benchmark::DoNotOptimize(commutant(subsystem_of(t, a)));
}
BENCHMARK(BM_CommutantKernel);

void BM_CommutantOracle(benchmark::State& state) {
  const auto& t = full_two_bits();
  const auto a = models::bit_maps(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::commutant(t, a));
}
BENCHMARK(BM_CommutantOracle);

struct HullCase {
  std::vector<PointSpec> sets;
  std::vector<RationalPoint> points;
};

const HullCase& hull_case() {
  static const HullCase c = [] {
    models::Rng rng(2);
    HullCase out;
    for (int i = 0; i < 32; ++i) {
      std::vector<RationalPoint> ps;
      for (int k = 0; k < 6; ++k) ps.push_back(models::random_point(rng, 2));
      out.sets.emplace_back(ps);
      out.points.push_back(models::random_point(rng, 2));
    }
    return out;
  }();
  return c;
}

void BM_HullSimplex(benchmark::State& state) {
  const auto& c = hull_case();
  for (auto _ : state)
    for (std::size_t i = 0; i < c.sets.size(); ++i) benchmark::DoNotOptimize(hull_contains(c.sets[i], c.points[i]));
}
BENCHMARK(BM_HullSimplex)->Unit(benchmark::kMicrosecond);

void BM_HullOracle(benchmark::State& state) {
  const auto& c = hull_case();
  for (auto _ : state)
    for (std::size_t i = 0; i < c.sets.size(); ++i)
      benchmark::DoNotOptimize(oracle::hull_contains(c.sets[i], c.points[i]));
}
BENCHMARK(BM_HullOracle)->Unit(benchmark::kMicrosecond);

void BM_EnumerateComplete(benchmark::State& state) {
  const auto& t = full_two_bits();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_complete(t));
}
BENCHMARK(BM_EnumerateComplete)->Unit(benchmark::kMillisecond)->Iterations(2);

} // namespace

BENCHMARK_MAIN();
