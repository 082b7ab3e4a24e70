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
 * Theory files (".rt"): a line-oriented text format declaring one state space
 * and named maps, monoids, lumpings, embeddings, approximation structures,
 * point sets and subsystem isomorphisms. See docs/theory-format.md for the
 * grammar.
 *
 * Definitions are kept declaratively; monoids and structures are built on
 * request from the resolved maps.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtk/approx.hpp"
#include "rtk/convex.hpp"
#include "rtk/embed.hpp"
#include "rtk/locality.hpp"
#include "rtk/theory.hpp"

namespace rtk {

struct NamedMap {
  std::string name;
  SpecMap map;
  friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

struct MonoidDef {
  std::string name;
  /// Map names, earlier monoid names, or @all-deterministic / @all-permutations.
  std::vector<std::string> generators;
  std::optional<std::size_t> cap;
  friend bool operator==(const MonoidDef&, const MonoidDef&) = default;
};

struct ApproxDef {
  std::string name;
  std::vector<std::string> index;
  /// Declared (a, b) pairs meaning a ≤ b; empty means the listed order is a chain.
  std::vector<std::pair<std::string, std::string>> order;
  std::string max;
  std::optional<std::string> zero;
  /// Map name per index element, in index order.
  std::vector<std::string> maps;
  struct ChainDef {
    std::vector<std::string> members;
    std::vector<std::tuple<std::string, std::string, std::string>> sums;
    friend bool operator==(const ChainDef&, const ChainDef&) = default;
  };
  std::vector<ChainDef> chains;
  friend bool operator==(const ApproxDef&, const ApproxDef&) = default;
};

struct PointsDef {
  std::string name;
  PointSpec points;
  friend bool operator==(const PointsDef&, const PointsDef&) = default;
};

struct IsoDef {
  std::string name;
  std::vector<std::pair<std::string, std::string>> pairs;
  friend bool operator==(const IsoDef&, const IsoDef&) = default;
};

class TheoryFile {
public:
  std::optional<StateSpace> states;
  std::vector<NamedMap> maps;
  std::vector<MonoidDef> monoids;
  std::vector<NamedMap> lumpings;
  /// Maps into the file's space from a source space of their own.
  std::vector<NamedMap> embeddings;
  std::vector<ApproxDef> approximations;
  std::vector<PointsDef> point_sets;
  std::vector<IsoDef> isos;

  /// Throws UnknownReference when the file has no [states] section.
  const StateSpace& space() const;

  /// "id" always names the identity. Lookups throw UnknownReference.
  SpecMap map(const std::string& name) const;
  /// Generators in declaration order with their names, sugar expanded.
  std::pair<std::vector<SpecMap>, std::vector<std::string>> generators(const std::string& monoid) const;
  /// Closure under the declared cap (default_monoid_cap() otherwise).
  TransformationMonoid monoid(const std::string& name) const;
  Lumping lumping(const std::string& name) const;
  const SpecMap& embedding(const std::string& name) const;
  ApproximationStructure approximation(const std::string& name) const;
  const PointSpec& points(const std::string& name) const;
  SubsystemIso iso(const std::string& name) const;

  /// Space-separated labels, e.g. "a b". Throws UnknownState, EmptySpecification.
  Specification spec(std::string_view labels) const;

  bool has_map(const std::string& name) const;
  bool has_monoid(const std::string& name) const;

  friend bool operator==(const TheoryFile& a, const TheoryFile& b);
};

/// Throws ParseError with line and column, DuplicateName or UnknownReference.
TheoryFile parse_theory(std::string_view text);

/// Canonical text; parse_theory(print_theory(m)) == m.
std::string print_theory(const TheoryFile& model);

/// Transitive reduction of `leq` as a DOT digraph with edges from lower to
/// upper nodes, in index order.
std::string export_dot(const std::vector<std::string>& labels, const std::vector<std::vector<bool>>& leq,
                       const std::string& graph_name = "order");

} // namespace rtk
