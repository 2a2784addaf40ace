#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/groebner.hpp"
#include "veronese/koszul.hpp"

namespace veronese {
namespace {

TEST(GrHilbert, PlanarRingsGrowLinearly) {
  for (const auto& [w, d] : std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
           {{1, 29}, 47}, {{1, 5}, 7}, {{2, 3}, 19}}) {
    const auto g = veronese_generators_2d({w, d});
    const auto h = gr_hilbert(g, 5);
    const auto s = static_cast<std::int64_t>(g.size());
    for (std::int64_t k = 0; k <= 5; ++k) EXPECT_EQ(h[static_cast<std::size_t>(k)], k * (s - 1) + 1);
  }
}

TEST(GrHilbert, MatchesLayerOracle) {
  const auto g = veronese_generators_nd({{3, 4, 5}, 15}).gens;
  EXPECT_EQ(gr_hilbert(g, 4), oracle::order_profile(g.gens(), 4));
}

TEST(QuadraticDefect, PlanarRingsHaveNone) {
  for (std::int64_t c = 1; c < 20; ++c) {
    const auto g = veronese_generators_2d({{1, c}, 20});
    if (g.size() > 10) continue;
    const auto r = quadratic_defect(g);
    EXPECT_EQ(r.defect, 0u) << c;
    EXPECT_FALSE(r.witness.has_value());
    const auto s = g.size();
    EXPECT_EQ(r.quadratic_relations, (s - 1) * (s - 2) / 2);
    EXPECT_EQ(r.quadratic_relations, minimal_toric_generators(g, toric_ideal(g)).size());
  }
}

TEST(QuadraticDefect, NonKoszulExample) {
  const auto g = veronese_generators_nd({{3, 4, 5}, 15}).gens;
  const auto r = quadratic_defect(g);
  EXPECT_EQ(r.defect, 1u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 2u);
  const auto& terms = r.witness->terms();
  EXPECT_TRUE(oracle::same_image(g.gens(), terms[0].exponents, terms[1].exponents));
  std::vector<std::string> names{monomial_to_string(terms[0].exponents), monomial_to_string(terms[1].exponents)};
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"t1*t3*t4", "t2^3"}));
}

TEST(QuadraticDefect, GeneratorCap) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  DefectOptions opt;
  opt.max_generators = 5;
  EXPECT_THROW(quadratic_defect(g, opt), BudgetError);
}

TEST(Families, ProbesHavePositiveDefect) {
  for (std::int64_t k = 1; k <= 3; ++k) {
    const auto inst = nonkoszul_family_instance(1, k);
    const auto g = veronese_generators_nd({inst.probe_weights, inst.spec.degree}).gens;
    EXPECT_GT(quadratic_defect(g).defect, 0u) << "family 1, k = " << k;
  }
  for (std::int64_t f = 2; f <= 4; ++f) {
    const auto inst = nonkoszul_family_instance(2, f);
    EXPECT_EQ(inst.spec.degree, 3 * (f * f + f - 1));
    const auto g = veronese_generators_nd({inst.probe_weights, inst.spec.degree}).gens;
    EXPECT_GT(quadratic_defect(g).defect, 0u) << "family 2, f = " << f;
  }
  EXPECT_THROW(nonkoszul_family_instance(3, 1), InputError);
}

TEST(Families, DegreePiece) {
  for (std::int64_t f = 2; f <= 6; ++f) {
    const auto inst = nonkoszul_family_instance(2, f);
    auto got = weighted_monomials_of_degree(inst.probe_weights, inst.spec.degree);
    auto want = family2_degree_piece(f);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << f;
  }
}

TEST(Families, ExtraWeightsAreAppended) {
  const auto inst = nonkoszul_family_instance(1, 1, {100});
  EXPECT_EQ(inst.spec.weights.size(), 4u);
  EXPECT_EQ(inst.probe_weights.size(), 3u);
}

TEST(Certification, PlanarVeroneseIsCertified) {
  const auto g = veronese_generators_2d({{1, 29}, 47});
  EXPECT_EQ(certify_koszul_quadratic_gb(g).status, KoszulStatus::Certified);
}

TEST(Certification, RefusesUnsupportedInput) {
  const auto nd = veronese_generators_nd({{3, 4, 5}, 15}).gens;
  EXPECT_EQ(certify_koszul_quadratic_gb(nd).status, KoszulStatus::Refused);
  // k[x^3, x^2 y, y^3] is convex but misses x y^2: not closed under division.
  const SemigroupGens gap({{3, 0}, {2, 1}, {0, 3}});
  const auto r = certify_koszul_quadratic_gb(gap);
  EXPECT_EQ(r.status, KoszulStatus::Refused);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_STREQ(to_string(KoszulStatus::Certified), "certified");
}

}  // namespace
}  // namespace veronese
