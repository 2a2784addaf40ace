#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/lattice.hpp"
#include "veronese/semigroup.hpp"

namespace veronese {
namespace {

ConvexSequence sequence_1_29_47() {
  return ConvexSequence({{47, 0}, {18, 1}, {7, 3}, {3, 8}, {2, 21}, {1, 34}, {0, 47}});
}

TEST(ConvexSequence, ReversesIncreasingInput) {
  ConvexSequence seq({{0, 2}, {1, 1}, {2, 0}});
  EXPECT_TRUE(seq.reversed_input());
  EXPECT_EQ(seq[0], (LatticePoint{2, 0}));
  EXPECT_EQ(seq[2], (LatticePoint{0, 2}));
}

TEST(ConvexSequence, RejectsBadInput) {
  EXPECT_THROW(ConvexSequence({{2, 0}, {1, 2}, {0, 3}}), InputError);  // bends the wrong way
  EXPECT_THROW(ConvexSequence({{2, 0}, {3, 1}, {1, 2}}), OrderingError);
  EXPECT_THROW(ConvexSequence({{1, 1}, {1, 1}}), InputError);
  EXPECT_THROW(ConvexSequence({{1, 1, 1}}), DimensionError);
  EXPECT_THROW(ConvexSequence(std::vector<LatticePoint>{}), InputError);
}

TEST(ConvexSequence, IsConvexAcceptsCollinear) {
  const std::vector<LatticePoint> line{{4, 0}, {3, 1}, {2, 2}, {1, 3}};
  EXPECT_TRUE(is_convex_sequence(line));
  EXPECT_EQ(corner_points(ConvexSequence(line)), (std::vector<std::size_t>{0, 3}));
}

TEST(CornerPoints, V1_29Degree47) {
  EXPECT_EQ(corner_points(sequence_1_29_47()), (std::vector<std::size_t>{0, 1, 2, 3, 6}));
}

TEST(CornerPoints, MatchesMidpointOracleOnVeroneseSequences) {
  for (std::int64_t d = 2; d <= 40; ++d) {
    for (std::int64_t c = 1; c < d; ++c) {
      const auto gens = veronese_generators_2d({{1, c}, d});
      std::vector<oracle::Point> pts(gens.gens().begin(), gens.gens().end());
      std::sort(pts.begin(), pts.end(), std::greater<>());
      EXPECT_EQ(corner_points(ConvexSequence(gens.gens())), oracle::corners(pts)) << c << " " << d;
    }
  }
}

TEST(ConvexProperty, StrictWhenCornerInRange) {
  const auto seq = sequence_1_29_47();
  // c_2 + c_3 vs c_1 + c_4 (0-based 1,2 and 0,3): corners 1 and 2 sit in between.
  const auto r = check_convex_property(seq, 1, 2, 1);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.strict);
  // Inside the last segment every point is a midpoint, so equality holds.
  const auto flat = check_convex_property(seq, 4, 5, 1);
  EXPECT_TRUE(flat.holds);
  EXPECT_FALSE(flat.strict);
  EXPECT_THROW(check_convex_property(seq, 3, 2, 0), InputError);
  EXPECT_THROW(check_convex_property(seq, 0, 6, 1), InputError);
}

TEST(ConvexProperty, PropertyOverAllTriples) {
  const auto seq = ConvexSequence(veronese_generators_2d({{3, 8}, 17}).gens());
  const auto corners = corner_points(seq);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i; j < seq.size(); ++j) {
      for (std::size_t k = 0; k <= i && j + k < seq.size(); ++k) {
        const auto r = check_convex_property(seq, i, j, k);
        EXPECT_TRUE(r.holds);
        const bool corner_between =
            std::any_of(corners.begin(), corners.end(), [&](std::size_t c) { return c > i - k && c < j + k; });
        if (k > 0) EXPECT_EQ(r.strict, corner_between) << i << " " << j << " " << k;
      }
    }
  }
}

TEST(ExtendedGcd, Bezout) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  for (int it = 0; it < 500; ++it) {
    const auto a = dist(rng), b = dist(rng);
    std::int64_t x = 0, y = 0;
    const auto g = extended_gcd(a, b, x, y);
    EXPECT_EQ(g, std::gcd(a, b));
    EXPECT_EQ(x * a + y * b, g);
  }
}

TEST(NormalizeCone, KnownForms) {
  EXPECT_EQ(normalize_cone({{1, 0}, {5, 7}}), (NormalizedCone{5, 7}));
  EXPECT_EQ(normalize_cone({{1, 0}, {0, 1}}), (NormalizedCone{0, 1}));
  EXPECT_EQ(normalize_cone({{0, 1}, {1, 0}}), (NormalizedCone{0, 1}));
  EXPECT_THROW(normalize_cone({{2, 0}, {1, 1}}), PreconditionError);
  EXPECT_THROW(normalize_cone({{1, 1}, {-1, -1}}), DegenerateConeError);
}

TEST(NormalizeCone, GeneratorCountMatchesHilbertBasisSieve) {
  for (std::int64_t d = 2; d <= 15; ++d) {
    for (std::int64_t c = 1; c < d; ++c) {
      if (std::gcd(c, d) != 1) continue;
      const auto nc = normalize_cone({{1, 0}, {c, d}});
      EXPECT_EQ(nc, (NormalizedCone{c, d}));
      EXPECT_EQ(veronese_generators_2d({{1, c}, d}).size(), oracle::cone_hilbert_basis({1, 0}, {c, d}).size());
    }
  }
}

}  // namespace
}  // namespace veronese
