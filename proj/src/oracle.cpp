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

#include "rtk/oracle.hpp"

#include <set>

namespace rtk::oracle {

namespace {

using StateSet = std::set<std::size_t>;

StateSet members(StateMask m, std::size_t n) {
  StateSet s;
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) s.insert(i);
  return s;
}

StateSet image(const SpecMap& f, const StateSet& v) {
  StateSet out;
  for (auto i : v) {
    const StateSet part = members(f.table()[i], f.target().size());
    out.insert(part.begin(), part.end());
  }
  return out;
}

bool subset(const StateSet& a, const StateSet& b) {
  for (auto x : a)
    if (b.count(x) == 0) return false;
  return true;
}

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

} // namespace

ReachWitness reaches(const ResourceTheory& t, const Specification& v, const Specification& w) {
  const std::size_t n = t.space().size();
  if (n > 6) fail(ErrorKind::TooLarge, "oracle reachability is limited to six states");
  require_same_space(t.space(), v.space(), "oracle reaches");
  require_same_space(t.space(), w.space(), "oracle reaches");
  const StateSet vs = members(v.mask(), n);
  const StateSet ws = members(w.mask(), n);
  ReachWitness out;
  for (std::size_t k = 0; k < t.monoid().size(); ++k) {
    if (subset(image(t.monoid().element(k), vs), ws)) {
      out.found = true;
      out.index = k;
      out.map = t.monoid().element(k);
      out.name = t.monoid().name(k);
      return out;
    }
  }
  return out;
}

std::vector<std::size_t> commutant(const TransformationMonoid& t, const std::vector<SpecMap>& a) {
  if (t.size() > 4096) fail(ErrorKind::TooLarge, "oracle commutant is limited to 4096 elements");
  const std::size_t n = t.space().size();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const SpecMap& g = t.element(k);
    bool all = true;
    for (const auto& f : a) {
      for (std::size_t s = 0; s < n && all; ++s) {
        const StateSet single{s};
        all = image(f, image(g, single)) == image(g, image(f, single));
      }
      if (!all) break;
    }
    if (all) out.push_back(k);
  }
  return out;
}

bool hull_contains(const PointSpec& v, const RationalPoint& x) {
  if (v.dim() != x.dim()) fail(ErrorKind::DimMismatch, "oracle hull: dimensions differ");
  if (v.dim() > 2 || v.size() > 6) fail(ErrorKind::TooLarge, "oracle hull is limited to two dimensions and six points");
  const auto& p = v.points();
  for (const auto& q : p)
    if (q == x) return true;
  if (v.dim() == 1) {
    Rational lo = p[0][0], hi = p[0][0];
    for (const auto& q : p) {
      if (q[0] < lo) lo = q[0];
      if (q[0] > hi) hi = q[0];
    }
    return lo <= x[0] && x[0] <= hi;
  }
  // Segments cover the degenerate (collinear) cases.
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Rational dx = p[j][0] - p[i][0], dy = p[j][1] - p[i][1];
      const Rational rx = x[0] - p[i][0], ry = x[1] - p[i][1];
      if (cross(dx, dy, rx, ry) != 0) continue;
      const Rational len = dx * dx + dy * dy;
      const Rational t = (rx * dx + ry * dy) / len;
      if (t >= 0 && t <= 1) return true;
    }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        const Rational bx = p[j][0] - p[i][0], by = p[j][1] - p[i][1];
        const Rational cx = p[k][0] - p[i][0], cy = p[k][1] - p[i][1];
        const Rational det = cross(bx, by, cx, cy);
        if (det == 0) continue;
        const Rational rx = x[0] - p[i][0], ry = x[1] - p[i][1];
        const Rational lb = cross(rx, ry, cx, cy) / det;
        const Rational lc = cross(bx, by, rx, ry) / det;
        if (lb >= 0 && lc >= 0 && lb + lc <= 1) return true;
      }
  return false;
}

} // namespace rtk::oracle
