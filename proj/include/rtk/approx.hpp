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
 * Approximation structures: a poset of tolerances ε, each with an inflating
 * endomorphism W ↦ W^ε. Larger tolerances give larger neighbourhoods and the
 * top tolerance forgets everything.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rtk/embed.hpp"
#include "rtk/report.hpp"
#include "rtk/spec.hpp"
#include "rtk/theory.hpp"

namespace rtk {

class ApproxIndex {
public:
  /// `order` lists pairs (a, b) meaning a ≤ b; the reflexive transitive
  /// closure is taken. Throws BadIndex unless the closure is antisymmetric
  /// and `max` lies above everything; UnknownIndex for undeclared labels.
  ApproxIndex(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& order,
              const std::string& max, const std::optional<std::string>& zero = std::nullopt);

  /// Totally ordered chain with an index-valued label list, e.g. {0,1,2}.
  static ApproxIndex chain(std::vector<std::string> labels, bool with_zero);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws UnknownIndex.
  std::size_t index(const std::string& label) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  std::size_t max() const { return max_; }
  std::optional<std::size_t> zero() const { return zero_; }

  struct Chain {
    std::vector<std::size_t> members;
    /// Declared sums; missing ones clamp to the top element.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> sums;
  };

  /// Throws BadIndex if the members are not totally ordered, a sum leaves
  /// the chain or a+b and b+a are declared differently.
  void add_chain(const std::vector<std::string>& members,
                 const std::vector<std::tuple<std::string, std::string, std::string>>& sums);
  const std::vector<Chain>& chains() const { return chains_; }
  std::size_t add(std::size_t chain, std::size_t a, std::size_t b) const;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::size_t max_ = 0;
  std::optional<std::size_t> zero_;
  std::vector<Chain> chains_;
};

class ApproximationStructure {
public:
  /// One endomorphism per index element, in index order.
  ApproximationStructure(ApproxIndex index, std::vector<SpecMap> family);

  const ApproxIndex& index() const { return index_; }
  const std::vector<SpecMap>& family() const { return family_; }
  const SpecMap& at(std::size_t eps) const { return family_.at(eps); }
  const StateSpace& space() const { return family_.front().source(); }

private:
  ApproxIndex index_;
  std::vector<SpecMap> family_;
};

struct StructureReport {
  /// inflating, monotone, saturating.
  Report report;
  bool attainable = false;
  bool ok() const { return report.ok(); }
};

StructureReport verify_structure(const ApproximationStructure& s);

/// V^ε. Throws UnknownIndex.
Specification approximate(const ApproximationStructure& s, const Specification& v, const std::string& eps);
Specification approximate(const ApproximationStructure& s, const Specification& v, std::size_t eps);

/// (W^ε)^ε′ ⊆ W^{ε+ε′} on every declared chain, plus the chained-inclusion
/// corollary on `samples` random triples. Throws NoChainsDeclared.
Report check_triangle(const ApproximationStructure& s, std::uint64_t seed = 0, std::size_t samples = 1000);

/// {ω}^ε for all ω and ε, deduplicated, ordered by size then mask.
std::vector<Specification> approximation_space(const ApproximationStructure& s);

/// f({ω}^ε) ⊆ f({ω})^ε for every allowed f, ε and ω.
Report is_stable(const ResourceTheory& t, const ApproximationStructure& s);

/// V^ε is not free.
bool is_robust(const ResourceTheory& t, const ApproximationStructure& s, const Specification& v, std::size_t eps);

/// W ↦ h((e(W))^ε) on the small space.
ApproximationStructure reduce_structure(const ApproximationStructure& s, const GaloisInsertion& ins);

/// h∘·^ε = h∘·^ε∘Λ for every ε.
bool preserves_approximations(const ApproximationStructure& s, const GaloisInsertion& ins);

} // namespace rtk
