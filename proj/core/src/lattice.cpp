#include "veronese/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

__extension__ typedef __int128 Wide;

void require_2d(std::span<const LatticePoint> points) {
  for (const auto& p : points) {
    if (p.size() != 2) {
      throw DimensionError("convex sequences live in N^2, got a point of dimension " +
                           std::to_string(p.size()));
    }
  }
}

bool nonincreasing_first(std::span<const LatticePoint> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i][0] > points[i - 1][0]) return false;
  }
  return true;
}

bool nondecreasing_first(std::span<const LatticePoint> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i][0] < points[i - 1][0]) return false;
  }
  return true;
}

bool is_corner_at(std::span<const LatticePoint> points, std::size_t i) {
  const auto& prev = points[i - 1];
  const auto& cur = points[i];
  const auto& next = points[i + 1];
  return 2 * cur[0] != prev[0] + next[0] || 2 * cur[1] != prev[1] + next[1];
}

}  // namespace

bool dominates(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVector subtract(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool collinear(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const Wide cross = static_cast<Wide>(b[0] - a[0]) * (c[1] - a[1]) -
                         static_cast<Wide>(b[1] - a[1]) * (c[0] - a[0]);
  return cross == 0;
}

bool is_convex_sequence(std::span<const LatticePoint> points) {
  if (points.empty()) throw InputError("a convex sequence needs at least one point");
  require_2d(points);
  if (!nonincreasing_first(points) && !nondecreasing_first(points)) {
    throw OrderingError("first coordinates are not monotone");
  }
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    for (int axis = 0; axis < 2; ++axis) {
      if (2 * points[i][axis] > points[i - 1][axis] + points[i + 1][axis]) return false;
    }
  }
  return true;
}

ConvexSequence::ConvexSequence(std::vector<LatticePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("a convex sequence needs at least one point");
  require_2d(points_);
  for (const auto& p : points_) {
    if (p[0] < 0 || p[1] < 0) throw InputError("lattice points must be nonnegative");
  }
  if (!nonincreasing_first(points_)) {
    if (!nondecreasing_first(points_)) throw OrderingError("first coordinates are not monotone");
    std::reverse(points_.begin(), points_.end());
    reversed_ = true;
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] == points_[i - 1]) throw InputError("repeated point in sequence");
  }
  if (!is_convex_sequence(points_)) throw InputError("points do not form a convex sequence");
}

std::vector<std::size_t> corner_points(const ConvexSequence& seq) {
  const auto& pts = seq.points();
  std::vector<std::size_t> corners;
  corners.push_back(0);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (is_corner_at(pts, i)) corners.push_back(i);
  }
  if (pts.size() > 1) corners.push_back(pts.size() - 1);
  return corners;
}

ConvexPropertyCheck check_convex_property(const ConvexSequence& seq, std::size_t i,
                                          std::size_t j, std::size_t k) {
  if (i > j) throw InputError("check_convex_property requires i <= j");
  if (k > i || j + k >= seq.size()) throw InputError("index out of range");
  const auto lhs = add(seq[i], seq[j]);
  const auto rhs = add(seq[i - k], seq[j + k]);
  ConvexPropertyCheck out;
  out.holds = dominates(rhs, lhs);
  out.strict = out.holds && lhs != rhs;
  return out;
}

std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

NormalizedCone normalize_cone(const ConeSpec& cone) {
  const auto [p, q] = cone.u;
  const auto [v0, v1] = cone.v;
  if (std::gcd(p, q) != 1 || std::gcd(v0, v1) != 1) {
    throw PreconditionError("cone generators must be primitive vectors");
  }
  if (static_cast<Wide>(p) * v1 - static_cast<Wide>(q) * v0 == 0) {
    throw DegenerateConeError("cone generators are parallel");
  }
  // T = [[x, y], [-q, p]] has determinant 1 and sends u to (1, 0).
  std::int64_t x = 0, y = 0;
  extended_gcd(p, q, x, y);
  const std::int64_t c_raw = x * v0 + y * v1;
  std::int64_t d = -q * v0 + p * v1;
  if (d < 0) d = -d;  // reflect across the first axis; fixes (1, 0)
  std::int64_t c = c_raw % d;
  if (c < 0) c += d;
  return {c, d};
}

}  // namespace veronese
