#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace veronese {

using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;
using LatticePoint = ExponentVector;

/// Componentwise a >= b. Sizes must agree.
bool dominates(const ExponentVector& a, const ExponentVector& b);

ExponentVector add(const ExponentVector& a, const ExponentVector& b);
ExponentVector subtract(const ExponentVector& a, const ExponentVector& b);

/// Exact test that the 2D points a, b, c lie on one line.
bool collinear(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// True iff 2c_i <= c_{i-1} + c_{i+1} componentwise for every interior i.
/// Points must be 2D with monotone first coordinates (either direction).
bool is_convex_sequence(std::span<const LatticePoint> points);

/// A convex sequence of distinct points of N^2, stored with the first
/// coordinate nonincreasing. Input in the opposite direction is reversed.
class ConvexSequence {
 public:
  explicit ConvexSequence(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  /// True when the constructor had to reverse its input.
  bool reversed_input() const { return reversed_; }

 private:
  std::vector<LatticePoint> points_;
  bool reversed_ = false;
};

/// 0-based indices of the corner points; always contains 0 and size()-1.
std::vector<std::size_t> corner_points(const ConvexSequence& seq);

struct ConvexPropertyCheck {
  bool holds = false;   // c_i + c_j <= c_{i-k} + c_{j+k}
  bool strict = false;  // holds, and differs in at least one coordinate
};

/// Evaluates c_i + c_j <= c_{i-k} + c_{j+k} (0-based, i <= j).
ConvexPropertyCheck check_convex_property(const ConvexSequence& seq, std::size_t i,
                                          std::size_t j, std::size_t k);

/// A 2D cone spanned by primitive, linearly independent integer vectors.
struct ConeSpec {
  std::array<std::int64_t, 2> u{};
  std::array<std::int64_t, 2> v{};
};

struct NormalizedCone {
  std::int64_t c = 0;
  std::int64_t d = 1;

  friend bool operator==(const NormalizedCone&, const NormalizedCone&) = default;
};

/// Unimodular normal form (c, d), 0 <= c < d, gcd(c, d) = 1: the cone is
/// equivalent to the one spanned by (1, 0) and (c, d), whose semigroup ring is
/// V_{(1,c),d}.
NormalizedCone normalize_cone(const ConeSpec& cone);

/// Extended Euclid: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

}  // namespace veronese
