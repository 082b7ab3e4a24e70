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
 * Convex structure of rational vector spaces, in exact arithmetic.
 *
 * Specifications here are finite generating point sets; their hull is never
 * materialized, only queried for membership and reduced to extreme points.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rtk/report.hpp"

namespace rtk {

using Rational = mpq_class;

/// "n", "-n" or "n/d" in lowest or any terms. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

class RationalPoint {
public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  /// Space-separated coordinates, e.g. "1/2 3".
  std::string to_string() const;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords_ < b.coords_; }

private:
  std::vector<Rational> coords_;
};

class Distribution {
public:
  /// Throws BadProbability unless weights are nonnegative and sum to 1.
  explicit Distribution(std::vector<Rational> weights);
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }

private:
  std::vector<Rational> weights_;
};

/// Nonempty finite point set of one dimension, sorted and deduplicated.
class PointSpec {
public:
  /// Throws EmptySpecification or DimMismatch.
  explicit PointSpec(std::vector<RationalPoint> points);
  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return points_.front().dim(); }
  const std::vector<RationalPoint>& points() const { return points_; }
  const RationalPoint& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const RationalPoint& x) const;
  std::string to_string() const;

  friend bool operator==(const PointSpec& a, const PointSpec& b) { return a.points_ == b.points_; }

private:
  std::vector<RationalPoint> points_;
};

/// x ↦ matrix·x + offset.
class AffineMap {
public:
  /// Throws DimMismatch for ragged input.
  AffineMap(std::vector<std::vector<Rational>> matrix, std::vector<Rational> offset);
  static AffineMap identity(std::size_t dim);
  static AffineMap constant(std::size_t in_dim, const RationalPoint& value);

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return offset_.size(); }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  const std::vector<Rational>& offset() const { return offset_; }

  RationalPoint operator()(const RationalPoint& x) const;
  PointSpec operator()(const PointSpec& v) const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.matrix_ == b.matrix_ && a.offset_ == b.offset_;
  }

private:
  std::size_t in_dim_ = 0;
  std::vector<std::vector<Rational>> matrix_;
  std::vector<Rational> offset_;
};

/// f ∘ g.
AffineMap compose(const AffineMap& f, const AffineMap& g);

/// Any point map, e.g. a table or a non-affine formula.
using PointFunction = std::function<RationalPoint(const RationalPoint&)>;

/// p·x + (1−p)·y. Throws BadProbability, DimMismatch.
RationalPoint mix(const Rational& p, const RationalPoint& x, const RationalPoint& y);

/// ∑ p_i ν_i computed directly.
RationalPoint weighted_sum(const Distribution& p, const std::vector<RationalPoint>& points);

/// Right-nested binary mixtures with p′_1 = p_1 and p′_k = p_k / ∏_{i<k}(1−p′_i);
/// p′_k = 0 once the product vanishes. Throws LengthMismatch.
RationalPoint nested_mixture(const Distribution& p, const std::vector<RationalPoint>& points);
/// The binary coefficients p′ used by nested_mixture.
std::vector<Rational> nested_coefficients(const Distribution& p);

/// {mix(p, ν, ω) : ν ∈ V, ω ∈ W}.
PointSpec mix_specs(const Rational& p, const PointSpec& v, const PointSpec& w);

/// Exact phase-one simplex with Bland's rule. Throws DimMismatch.
bool hull_contains(const PointSpec& v, const RationalPoint& x);

/// Points of V that are not convex combinations of the others.
PointSpec extreme_points(const PointSpec& v);

/// Same convex hull.
bool prob_equivalent(const PointSpec& v, const PointSpec& w);

/// g(mix(p,ν,ω)) = mix(p,g(ν),g(ω)) over all p, ν ∈ V, ω ∈ W, and
/// hull(g(V ∪ W)) = hull(g(ext(V ∪ W))).
Report check_convexity_preserving(const PointFunction& g, const PointSpec& v, const PointSpec& w,
                                  const std::vector<Rational>& ps);

/// Entrywise p-blend of two affine maps. Throws DimMismatch, BadProbability.
AffineMap mix_maps(const Rational& p, const AffineMap& f, const AffineMap& g);

/// For every pair of maps, p and domain spec: the blended map's image is
/// probabilistically equivalent to the blended images, and blending
/// commutes with composition on either side.
Report check_doubly_convex(const std::vector<AffineMap>& maps, const std::vector<PointSpec>& domain,
                           const std::vector<Rational>& ps);

/// If f and g send all of `omega` to single points ν and ω, the blend sends
/// it to mix(p, ν, ω); returns that blended witness, else nullopt.
std::optional<AffineMap> free_mixture_witness(const Rational& p, const AffineMap& f, const AffineMap& g,
                                              const PointSpec& omega);

/// One point per line, coordinates as rational tokens; '#' comments.
PointSpec parse_points(std::string_view text);
std::string format_points(const PointSpec& v);

} // namespace rtk
