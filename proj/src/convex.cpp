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

#include "rtk/convex.hpp"

#include <algorithm>
#include <cctype>

#include "rtk/error.hpp"

namespace rtk {

namespace {

void require_probability(const Rational& p) {
  if (p < 0 || p > 1) fail(ErrorKind::BadProbability, "mixing weight " + format_rational(p) + " is outside [0,1]");
}

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    fail(ErrorKind::DimMismatch, std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

bool is_rational_token(std::string_view t) {
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == t.size()) return true;
  if (t[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
  return digits > 0 && i == t.size();
}

} // namespace

Rational parse_rational(std::string_view text) {
  if (!is_rational_token(text)) throw ParseError(1, 1, "not a rational number: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0)
    throw ParseError(1, static_cast<int>(slash + 2), "zero denominator in '" + std::string(text) + "'");
  Rational q(s);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string RationalPoint::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ' ';
    out += format_rational(coords_[i]);
  }
  return out;
}

Distribution::Distribution(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) fail(ErrorKind::BadProbability, "empty distribution");
  Rational sum = 0;
  for (const auto& w : weights_) {
    if (w < 0) fail(ErrorKind::BadProbability, "negative weight " + format_rational(w));
    sum += w;
  }
  if (sum != 1) fail(ErrorKind::BadProbability, "weights sum to " + format_rational(sum));
}

PointSpec::PointSpec(std::vector<RationalPoint> points) : points_(std::move(points)) {
  if (points_.empty()) fail(ErrorKind::EmptySpecification, "point specifications must be nonempty");
  for (const auto& p : points_) require_dim(p.dim(), points_.front().dim(), "point specification");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSpec::contains(const RationalPoint& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

std::string PointSpec::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ", ";
    out += points_[i].dim() == 1 ? points_[i].to_string() : "(" + points_[i].to_string() + ")";
  }
  return out + "}";
}

AffineMap::AffineMap(std::vector<std::vector<Rational>> matrix, std::vector<Rational> offset)
  : matrix_(std::move(matrix)), offset_(std::move(offset)) {
  require_dim(matrix_.size(), offset_.size(), "affine map rows");
  in_dim_ = matrix_.empty() ? 0 : matrix_.front().size();
  for (const auto& row : matrix_) require_dim(row.size(), in_dim_, "affine map columns");
}

AffineMap AffineMap::identity(std::size_t dim) {
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return {std::move(m), std::vector<Rational>(dim, 0)};
}

AffineMap AffineMap::constant(std::size_t in_dim, const RationalPoint& value) {
  return {std::vector<std::vector<Rational>>(value.dim(), std::vector<Rational>(in_dim, 0)), value.coords()};
}

RationalPoint AffineMap::operator()(const RationalPoint& x) const {
  require_dim(x.dim(), in_dim_, "affine map argument");
  std::vector<Rational> y = offset_;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < in_dim_; ++j) y[i] += matrix_[i][j] * x[j];
  return RationalPoint(std::move(y));
}

PointSpec AffineMap::operator()(const PointSpec& v) const {
  std::vector<RationalPoint> out;
  for (const auto& p : v.points()) out.push_back((*this)(p));
  return PointSpec(std::move(out));
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  require_dim(f.in_dim(), g.out_dim(), "affine composition");
  std::vector<std::vector<Rational>> m(f.out_dim(), std::vector<Rational>(g.in_dim(), 0));
  std::vector<Rational> b = f.offset();
  for (std::size_t i = 0; i < f.out_dim(); ++i) {
    for (std::size_t k = 0; k < f.in_dim(); ++k) {
      for (std::size_t j = 0; j < g.in_dim(); ++j) m[i][j] += f.matrix()[i][k] * g.matrix()[k][j];
      b[i] += f.matrix()[i][k] * g.offset()[k];
    }
  }
  return {std::move(m), std::move(b)};
}

RationalPoint mix(const Rational& p, const RationalPoint& x, const RationalPoint& y) {
  require_probability(p);
  require_dim(x.dim(), y.dim(), "mix");
  std::vector<Rational> z(x.dim());
  const Rational q = 1 - p;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = p * x[i] + q * y[i];
  return RationalPoint(std::move(z));
}

RationalPoint weighted_sum(const Distribution& p, const std::vector<RationalPoint>& points) {
  if (p.size() != points.size())
    fail(ErrorKind::LengthMismatch, std::to_string(p.size()) + " weights for " + std::to_string(points.size()) + " points");
  std::vector<Rational> z(points.front().dim(), 0);
  for (std::size_t k = 0; k < points.size(); ++k) {
    require_dim(points[k].dim(), z.size(), "weighted sum");
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += p[k] * points[k][i];
  }
  return RationalPoint(std::move(z));
}

std::vector<Rational> nested_coefficients(const Distribution& p) {
  std::vector<Rational> c(p.size(), 0);
  Rational rest = 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    c[k] = rest == 0 ? Rational(0) : Rational(p[k] / rest);
    rest *= 1 - c[k];
  }
  return c;
}

RationalPoint nested_mixture(const Distribution& p, const std::vector<RationalPoint>& points) {
  if (p.size() != points.size())
    fail(ErrorKind::LengthMismatch, std::to_string(p.size()) + " weights for " + std::to_string(points.size()) + " points");
  const auto c = nested_coefficients(p);
  // f_{p′_1}(ν_1, f_{p′_2}(ν_2, ...)), evaluated from the innermost term.
  RationalPoint acc = points.back();
  for (std::size_t k = points.size() - 1; k-- > 0;) acc = mix(c[k], points[k], acc);
  return acc;
}

PointSpec mix_specs(const Rational& p, const PointSpec& v, const PointSpec& w) {
  require_dim(v.dim(), w.dim(), "mix_specs");
  std::vector<RationalPoint> out;
  for (const auto& a : v.points())
    for (const auto& b : w.points()) out.push_back(mix(p, a, b));
  return PointSpec(std::move(out));
}

bool hull_contains(const PointSpec& v, const RationalPoint& x) {
  require_dim(v.dim(), x.dim(), "hull_contains");
  // λ ≥ 0 with ∑ λ_i v_i = x and ∑ λ_i = 1, one artificial per row.
  const std::size_t m = v.dim() + 1;
  const std::size_t nv = v.size();
  const std::size_t nc = nv + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(nc + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t[i][j] = i < v.dim() ? v[j][i] : Rational(1);
    t[i][nc] = i < v.dim() ? x[i] : Rational(1);
    if (t[i][nc] < 0)
      for (auto& a : t[i]) a = -a;
    t[i][nv + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = nv + i;
  std::vector<Rational> cost(nc + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) cost[j] -= t[i][j];
    cost[nc] -= t[i][nc];
  }
  for (;;) {
    std::size_t enter = nc;
    for (std::size_t j = 0; j < nc; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == nc) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][nc] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break; // unbounded cannot happen in phase one
    const Rational piv = t[leave][enter];
    for (auto& a : t[leave]) a /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= nc; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j <= nc; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return cost[nc] == 0;
}

PointSpec extreme_points(const PointSpec& v) {
  if (v.size() == 1) return v;
  std::vector<RationalPoint> keep;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<RationalPoint> others;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) others.push_back(v[j]);
    if (!hull_contains(PointSpec(std::move(others)), v[i])) keep.push_back(v[i]);
  }
  return PointSpec(std::move(keep));
}

bool prob_equivalent(const PointSpec& v, const PointSpec& w) {
  require_dim(v.dim(), w.dim(), "prob_equivalent");
  return extreme_points(v) == extreme_points(w);
}

Report check_convexity_preserving(const PointFunction& g, const PointSpec& v, const PointSpec& w,
                                  const std::vector<Rational>& ps) {
  require_dim(v.dim(), w.dim(), "check_convexity_preserving");
  Report r;
  std::string wit;
  for (const auto& p : ps) {
    for (const auto& a : v.points()) {
      for (const auto& b : w.points()) {
        const RationalPoint lhs = g(mix(p, a, b));
        const RationalPoint rhs = mix(p, g(a), g(b));
        if (!(lhs == rhs)) {
          wit = "p=" + format_rational(p) + " ν=" + a.to_string() + " ω=" + b.to_string() + ": " + lhs.to_string() +
                " vs " + rhs.to_string();
          break;
        }
      }
      if (!wit.empty()) break;
    }
    if (!wit.empty()) break;
  }
  r.add("g(mix) = mix(g)", wit.empty(), wit);

  std::vector<RationalPoint> all = v.points();
  all.insert(all.end(), w.points().begin(), w.points().end());
  const PointSpec u(all);
  std::vector<RationalPoint> gu, ge;
  for (const auto& p : u.points()) gu.push_back(g(p));
  const PointSpec ext = extreme_points(u);
  for (const auto& p : ext.points()) ge.push_back(g(p));
  const bool hull_ok = prob_equivalent(PointSpec(gu), PointSpec(ge));
  r.add("hull(g(V∪W)) = hull(g(ext(V∪W)))", hull_ok);
  return r;
}

AffineMap mix_maps(const Rational& p, const AffineMap& f, const AffineMap& g) {
  require_probability(p);
  require_dim(f.in_dim(), g.in_dim(), "mix_maps");
  require_dim(f.out_dim(), g.out_dim(), "mix_maps");
  const Rational q = 1 - p;
  auto m = f.matrix();
  auto b = f.offset();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = p * f.matrix()[i][j] + q * g.matrix()[i][j];
    b[i] = p * f.offset()[i] + q * g.offset()[i];
  }
  return {std::move(m), std::move(b)};
}

Report check_doubly_convex(const std::vector<AffineMap>& maps, const std::vector<PointSpec>& domain,
                           const std::vector<Rational>& ps) {
  Report r;
  std::string equiv, left, right;
  for (const auto& p : ps)
    for (std::size_t a = 0; a < maps.size(); ++a)
      for (std::size_t b = 0; b < maps.size(); ++b) {
        const auto& f = maps[a];
        const auto& g = maps[b];
        const AffineMap c = mix_maps(p, f, g);
        for (const auto& v : domain)
          if (equiv.empty() && !prob_equivalent(c(v), mix_specs(p, f(v), g(v))))
            equiv = "p=" + format_rational(p) + " maps " + std::to_string(a) + "," + std::to_string(b) + " V=" + v.to_string();
        for (std::size_t k = 0; k < maps.size(); ++k) {
          const auto& h = maps[k];
          if (h.in_dim() == f.out_dim() && left.empty() &&
              !(mix_maps(p, compose(h, f), compose(h, g)) == compose(h, c)))
            left = "p=" + format_rational(p) + " maps " + std::to_string(k) + "," + std::to_string(a) + "," + std::to_string(b);
          if (h.out_dim() == f.in_dim() && right.empty() &&
              !(mix_maps(p, compose(f, h), compose(g, h)) == compose(c, h)))
            right = "p=" + format_rational(p) + " maps " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k);
        }
      }
  r.add("c_p(f,g)(V) ~ mix(p, f(V), g(V))", equiv.empty(), equiv);
  r.add("c_p(h∘f, h∘g) = h∘c_p(f,g)", left.empty(), left);
  r.add("c_p(f∘h, g∘h) = c_p(f,g)∘h", right.empty(), right);
  return r;
}

std::optional<AffineMap> free_mixture_witness(const Rational& p, const AffineMap& f, const AffineMap& g,
                                              const PointSpec& omega) {
  const PointSpec fv = f(omega), gv = g(omega);
  if (fv.size() != 1 || gv.size() != 1) return std::nullopt;
  AffineMap c = mix_maps(p, f, g);
  const PointSpec cv = c(omega);
  if (cv.size() != 1 || !(cv[0] == mix(p, fv[0], gv[0]))) return std::nullopt;
  return c;
}

PointSpec parse_points(std::string_view text) {
  std::vector<RationalPoint> pts;
  std::size_t dim = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Rational> coords;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      try {
        coords.push_back(parse_rational(line.substr(i, j - i)));
      } catch (const ParseError& e) {
        throw ParseError(line_no, static_cast<int>(i + 1), "not a rational number: '" + std::string(line.substr(i, j - i)) + "'");
      }
      i = j;
    }
    if (!coords.empty()) {
      if (pts.empty()) dim = coords.size();
      if (coords.size() != dim)
        throw ParseError(line_no, 1, "point has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(dim));
      pts.emplace_back(std::move(coords));
    }
    pos = nl + 1;
  }
  if (pts.empty()) throw ParseError(line_no, 1, "no points");
  return PointSpec(std::move(pts));
}

std::string format_points(const PointSpec& v) {
  std::string out;
  for (const auto& p : v.points()) out += p.to_string() + "\n";
  return out;
}

} // namespace rtk
