#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/presentation.hpp"

namespace veronese {
namespace {

ConvexSequence sequence_of(const SemigroupGens& g) { return ConvexSequence(g.gens()); }

Monomial t(std::size_t s, std::initializer_list<std::pair<std::size_t, Exponent>> e) {
  Monomial m(s, 0);
  for (auto [i, k] : e) m[i - 1] = k;
  return m;
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

TEST(Skeleton, V1_29Degree47Shape) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  const auto sk = build_skeleton(sequence_of(g));
  EXPECT_EQ(sk.rows(), 3u);
  EXPECT_EQ(sk.cols(), 5u);
  EXPECT_EQ(sk.blocks().size(), 4u);
  EXPECT_TRUE(sk.is_variable(0, 0));
  EXPECT_TRUE(sk.is_blank(0, 2));
  EXPECT_FALSE(sk.is_filled());
}

TEST(Skeleton, SinglePointAndSingleSegment) {
  EXPECT_THROW(build_skeleton(ConvexSequence({{1, 0}})), InputError);
  const auto sk = build_skeleton(sequence_of(veronese_generators_2d({{1, 1}, 4})));  // rational normal quartic
  EXPECT_EQ(sk.rows(), 2u);
  EXPECT_EQ(sk.cols(), 4u);
  EXPECT_TRUE(sk.is_filled());
}

TEST(Fill, V1_29Degree47Matrix) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  const auto m = fill_skeleton(build_skeleton(sequence_of(g)), g);
  ASSERT_TRUE(m.is_filled());
  const std::size_t s = 7;
  EXPECT_EQ(m.monomial_at(0, 2), t(s, {{3, 2}}));
  EXPECT_EQ(m.monomial_at(0, 3), t(s, {{3, 1}, {4, 2}}));
  EXPECT_EQ(m.monomial_at(0, 4), t(s, {{3, 1}, {4, 1}, {5, 1}}));
  EXPECT_EQ(m.monomial_at(1, 0), t(s, {{2, 2}}));
  EXPECT_EQ(m.monomial_at(2, 0), t(s, {{2, 1}, {3, 2}, {4, 1}}));
  EXPECT_EQ(m.monomial_at(2, 1), t(s, {{4, 2}}));
  EXPECT_EQ(minors_2x2(m).size(), 28u);
  EXPECT_EQ(minimal_minors(m).size(), 15u);
}

TEST(Fill, RejectsMismatchedGenerators) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  const auto sk = build_skeleton(sequence_of(g));
  EXPECT_THROW(fill_skeleton(sk, veronese_generators_2d({{1, 5}, 7})), InputError);
  EXPECT_THROW(minors_2x2(sk), StateError);
}

TEST(Matrix, SetValidatesEntries) {
  PresentationMatrix m(2, 2, 3);
  EXPECT_THROW(m.set(2, 0, Variable{0}), InputError);
  EXPECT_THROW(m.set(0, 0, Variable{3}), InputError);
  EXPECT_THROW(m.set(0, 0, MonomialEntry{{1, 0, 0}}), InputError);
  EXPECT_THROW(m.set(0, 0, MonomialEntry{{1, 0}}), DimensionError);
  m.set(0, 0, MonomialEntry{{1, 1, 0}});
  EXPECT_FALSE(m.is_variable(0, 0));
  EXPECT_THROW(m.monomial_at(1, 1), StateError);
  EXPECT_EQ(m.to_string().find('*') != std::string::npos, true);
}

TEST(Presentation, MinorsVanishAndGenerateTheToricIdeal) {
  for (std::int64_t w1 = 1; w1 <= 6; ++w1) {
    for (std::int64_t w2 = w1; w2 <= 9; ++w2) {
      for (std::int64_t d = 2; d <= 24; ++d) {
        const auto g = veronese_generators_2d({{w1, w2}, d});
        if (g.size() < 3 || g.size() > 8) continue;
        const auto m = fill_skeleton(build_skeleton(sequence_of(g)), g);
        for (const auto& b : minors_2x2(m)) EXPECT_TRUE(oracle::same_image(g.gens(), b.plus, b.minus));
        const auto s = static_cast<std::int64_t>(g.size());
        EXPECT_EQ(static_cast<std::int64_t>(minimal_minors(m).size()), choose2(s - 1));
        const auto check = verify_presentation(m, g, 6);
        EXPECT_TRUE(check.vanishes);
        if (g.size() <= 6) {
          ASSERT_TRUE(check.ideal_equal.has_value());
          EXPECT_TRUE(*check.ideal_equal) << w1 << "," << w2 << " " << d;
        }
      }
    }
  }
}

TEST(Presentation, BrokenMatrixReportsWitness) {
  const auto g = veronese_generators_2d({{1, 1}, 2});
  PresentationMatrix m(2, 2, 3);
  m.set(0, 0, Variable{0});
  m.set(0, 1, Variable{1});
  m.set(1, 0, Variable{2});
  m.set(1, 1, Variable{2});
  const auto check = verify_presentation(m, g);
  EXPECT_FALSE(check.vanishes);
  EXPECT_TRUE(check.witness.has_value());
  EXPECT_FALSE(check.ok());
}

TEST(TwoSegment, Classification) {
  const auto a = two_segment_classify(5, 7);
  EXPECT_TRUE(a.two_segment);
  EXPECT_EQ(a.m, 1);
  EXPECT_EQ(a.r, 2);
  EXPECT_TRUE(two_segment_classify(1, 9).two_segment);
  EXPECT_THROW(two_segment_classify(2, 4), PreconditionError);
  EXPECT_THROW(two_segment_classify(0, 4), PreconditionError);
  EXPECT_THROW(two_segment_matrix(two_segment_classify(29, 47)), PreconditionError);
}

TEST(TwoSegment, ExplicitMatrixIsAPresentation) {
  for (std::int64_t d = 2; d <= 40; ++d) {
    for (std::int64_t c = 1; c < d; ++c) {
      if (std::gcd(c, d) != 1) continue;
      const auto spec = two_segment_classify(c, d);
      const auto g = veronese_generators_2d({{1, c}, d});
      const auto corners = corner_points(sequence_of(g)).size();
      EXPECT_EQ(spec.two_segment, corners <= 3) << c << " " << d;
      if (!spec.two_segment) continue;
      const auto pres = two_segment_matrix(spec);
      const std::set<ExponentVector> got(pres.gens.gens().begin(), pres.gens.gens().end());
      EXPECT_EQ(got, oracle::veronese_generators({1, c}, d));
      for (const auto& b : minors_2x2(pres.matrix)) {
        EXPECT_TRUE(oracle::same_image(pres.gens.gens(), b.plus, b.minus)) << c << " " << d;
      }
      if (pres.gens.size() <= 6) EXPECT_TRUE(verify_presentation(pres.matrix, pres.gens, 6).ok());
    }
  }
}

}  // namespace
}  // namespace veronese
