#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/semigroup.hpp"

namespace veronese {
namespace {

std::set<ExponentVector> as_set(const SemigroupGens& g) { return {g.gens().begin(), g.gens().end()}; }

TEST(VeroneseSpec, Validation) {
  EXPECT_THROW((VeroneseSpec{{1}, 2}.validate()), InputError);
  EXPECT_THROW((VeroneseSpec{{1, 0}, 2}.validate()), InputError);
  EXPECT_THROW((VeroneseSpec{{1, 2}, 0}.validate()), InputError);
  EXPECT_NO_THROW((VeroneseSpec{{1, 2}, 3}.validate()));
}

TEST(SemigroupGens, RejectsRedundantOrMalformed) {
  EXPECT_THROW(SemigroupGens({{2, 0}, {4, 0}}), InputError);
  EXPECT_THROW(SemigroupGens({{2, 0}, {1, 1}, {3, 1}}), InputError);
  EXPECT_THROW(SemigroupGens({{1, 1}, {1, 1}}), InputError);
  // Dominance alone is allowed: x^3 is not a power of x^2.
  EXPECT_NO_THROW(SemigroupGens({{2, 0}, {3, 0}}));
  EXPECT_THROW(SemigroupGens({{0, 0}}), InputError);
  EXPECT_THROW(SemigroupGens({{1, 0}, {1, 0, 0}}), DimensionError);
  EXPECT_THROW(SemigroupGens({{-1, 2}}), InputError);
  EXPECT_THROW(SemigroupGens(std::vector<ExponentVector>{}), InputError);
}

TEST(SemigroupGens, Degrees) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  EXPECT_EQ(g.degrees(Grading::Standard), (std::vector<std::int64_t>{47, 19, 10, 11, 23, 35, 47}));
  for (auto w : g.degrees(Grading::Weighted)) EXPECT_EQ(w % 47, 0);
  EXPECT_THROW(SemigroupGens({{1, 1}}).degrees(Grading::Weighted), PreconditionError);
}

TEST(Generators2d, V1_29Degree47) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  EXPECT_EQ(g.gens(), (std::vector<ExponentVector>{{47, 0}, {18, 1}, {7, 3}, {3, 8}, {2, 21}, {1, 34}, {0, 47}}));
}

TEST(Generators2d, MatchesBoxSieve) {
  for (std::int64_t w1 = 1; w1 <= 7; ++w1) {
    for (std::int64_t w2 = 1; w2 <= 7; ++w2) {
      for (std::int64_t d = 2; d <= 19; ++d) {
        const auto got = as_set(veronese_generators_2d({{w1, w2}, d}));
        EXPECT_EQ(got, oracle::veronese_generators({w1, w2}, d)) << w1 << "," << w2 << " " << d;
      }
    }
  }
}

TEST(GeneratorsNd, KnownExamplesAreComplete) {
  const auto a = veronese_generators_nd({{3, 4, 5}, 15});
  EXPECT_TRUE(a.complete);
  EXPECT_EQ(as_set(a.gens), oracle::veronese_generators({3, 4, 5}, 15));
  const auto b = veronese_generators_nd({{1, 6, 15}, 10});
  EXPECT_TRUE(b.complete);
  EXPECT_EQ(b.gens.size(), 8u);
  EXPECT_EQ(as_set(b.gens), oracle::veronese_generators({1, 6, 15}, 10));
}

TEST(GeneratorsNd, ShortScanIsFlaggedIncomplete) {
  const auto a = veronese_generators_nd({{1, 6, 15}, 10}, 3);
  EXPECT_FALSE(a.complete);
  // The degree-40 generator x1 x2^4 x3 is beyond 3*10.
  EXPECT_EQ(a.gens.size(), 7u);
}

TEST(GeneratorsNd, MatchesBoxSieveOnSmallTriples) {
  for (std::int64_t w3 = 1; w3 <= 6; ++w3) {
    for (std::int64_t d = 2; d <= 9; ++d) {
      const auto en = veronese_generators_nd({{1, 2, w3}, d});
      EXPECT_TRUE(en.complete);
      EXPECT_EQ(as_set(en.gens), oracle::veronese_generators({1, 2, w3}, d)) << w3 << " " << d;
    }
  }
}

TEST(MonomialsOfDegree, LexDecreasingAndCounted) {
  const auto m = monomials_of_weighted_degree({3, 4, 5}, 15);
  EXPECT_TRUE(std::is_sorted(m.rbegin(), m.rend()));
  EXPECT_EQ(mpz_class(static_cast<unsigned long>(m.size())), oracle::weighted_count({3, 4, 5}, 15));
}

TEST(Semigroup, MembershipAndOrder) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  Semigroup sg(g);
  EXPECT_TRUE(sg.contains({47, 0}));
  EXPECT_FALSE(sg.contains({1, 0}));
  EXPECT_TRUE(sg.contains({0, 0}));
  // (47,0) + (7,3) has length 2, but 3 * (18,1) is longer.
  EXPECT_EQ(sg.order({54, 3}), 3);
  EXPECT_EQ(sg.order({54, 3}), m_adic_order(g, {54, 3}));
  EXPECT_THROW(sg.order({1, 0}), DomainError);
  EXPECT_THROW(sg.contains({1, 0, 0}), DimensionError);
  EXPECT_TRUE(membership(g, {18 + 7, 4}));

  const auto small = veronese_generators_2d({{1, 5}, 7});
  EXPECT_TRUE(membership(small, {3, 5}));   // (2,1) + (1,4)
  EXPECT_FALSE(membership(small, {4, 5}));  // weighted degree 29
  EXPECT_EQ(m_adic_order(veronese_generators_2d({{1, 1}, 2}), {2, 2}), 2);
}

TEST(Semigroup, OrderIsSuperadditive) {
  const auto g = veronese_generators_2d({{2, 5}, 7});
  Semigroup sg(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto p = add(g[i], g[j]);
      EXPECT_GE(sg.order(add(p, g[0])), sg.order(p) + 1);
      EXPECT_EQ(sg.order(g[i]), 1);
    }
  }
}

TEST(Semigroup, FactorizationRespectsRestrictions) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  Semigroup sg(g);
  const ExponentVector p = add(add(g[2], g[2]), g[3]);
  const auto beta = sg.factorization(p, 2, 2);
  ASSERT_TRUE(beta.has_value());
  ASSERT_EQ(beta->size(), g.size());
  ExponentVector sum(2, 0);
  std::int64_t length = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i < 2) EXPECT_EQ((*beta)[i], 0);
    for (std::int64_t k = 0; k < (*beta)[i]; ++k) sum = add(sum, g[i]);
    length += (*beta)[i];
  }
  EXPECT_EQ(sum, p);
  EXPECT_GE(length, 2);
  EXPECT_FALSE(sg.factorization(g[3], 0, 2).has_value());
}

TEST(DivisionClosure, VeroneseIsClosedOthersMayNotBe) {
  EXPECT_TRUE(is_closed_under_division(veronese_generators_2d({{1, 5}, 7}), 14).closed);
  EXPECT_TRUE(is_closed_under_division(SemigroupGens({{1, 0}, {0, 1}}), 6).closed);
  const auto open = is_closed_under_division(SemigroupGens({{1, 1}, {2, 1}, {1, 2}}), 6);
  EXPECT_FALSE(open.closed);
  ASSERT_TRUE(open.witness.has_value());
  const auto [mu1, mu2] = *open.witness;
  EXPECT_EQ(subtract(mu1, mu2), (ExponentVector{1, 0}));
  EXPECT_FALSE(is_closed_under_division(SemigroupGens({{2, 0}, {3, 0}}), 8).closed);
  EXPECT_THROW(is_closed_under_division(SemigroupGens({{1, 0}}), -1), InputError);
}

TEST(MaxGenDegree, AgreesWithEnumeration) {
  for (std::int64_t w2 = 1; w2 <= 9; ++w2) {
    for (std::int64_t d = 2; d <= 25; ++d) {
      const VeroneseSpec spec{{1, w2}, d};
      const auto g = veronese_generators_2d(spec);
      const auto w = g.degrees(Grading::Weighted);
      EXPECT_EQ(*std::max_element(w.begin(), w.end()), max_gen_degree(spec)) << w2 << " " << d;
      EXPECT_LE(*std::max_element(w.begin(), w.end()), generator_degree_bound(spec));
    }
  }
}

}  // namespace
}  // namespace veronese
