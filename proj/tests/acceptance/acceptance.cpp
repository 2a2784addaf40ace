// One line per acceptance criterion. Every comparison is exact integer or set
// equality; the only tolerances are the pinned sizes and caps below.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/groebner.hpp"
#include "veronese/invariants.hpp"
#include "veronese/koszul.hpp"
#include "veronese/presentation.hpp"
#include "veronese_cli/cli.hpp"
#include "veronese_cli/json_io.hpp"

namespace {

using namespace veronese;
using nlohmann::json;

constexpr std::size_t kMinPlanarSpecs = 30;       // criterion 3
constexpr std::size_t kMaxPlanarSize = 10;        // s <= 10 for criterion 3
constexpr std::size_t kOracleCap = 8;             // ideal_equal, gb-check, Hochster, Koszul: s <= 8
constexpr std::size_t kMinHilbertSpecs = 20;      // criterion 6
constexpr std::size_t kHilbertTerms = 200;        // expansion to t^200
constexpr int kMaxFiberPower = 5;                 // criterion 7
constexpr std::int64_t kMaxClassifyDegree = 60;   // criterion 9
constexpr int kRandomCones = 1000;                // criterion 10
constexpr std::uint64_t kConeSeed = 20261014;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string spec_label(const VeroneseSpec& s) {
  std::ostringstream o;
  o << "V_(";
  for (std::size_t i = 0; i < s.weights.size(); ++i) o << (i ? "," : "") << s.weights[i];
  o << ")," << s.degree;
  return o.str();
}

int invoke(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

std::vector<VeroneseSpec> planar_corpus_specs() {
  std::ifstream in(VERONESE_CORPUS_PATH);
  const auto corpus = json::parse(in);
  std::vector<VeroneseSpec> out;
  for (const auto& e : corpus.at("entries")) {
    if (!e.contains("spec")) continue;
    VeroneseSpec s{e.at("spec").at("weights").get<std::vector<std::int64_t>>(), e.at("spec").at("degree").get<std::int64_t>()};
    if (s.dimension() == 2) out.push_back(s);
  }
  return out;
}

std::set<ExponentVector> point_set(const std::vector<ExponentVector>& v) { return {v.begin(), v.end()}; }

bool same_binomial_up_to_sign(const Binomial& a, const Binomial& b) {
  return (a.plus == b.plus && a.minus == b.minus) || (a.plus == b.minus && a.minus == b.plus);
}

Monomial mono(std::size_t s, std::initializer_list<std::pair<std::size_t, Exponent>> e) {
  Monomial m(s, 0);
  for (auto [i, k] : e) m[i - 1] = k;
  return m;
}

// Published generator sets, in the order they are listed with each ring.
Outcome criterion1() {
  const std::vector<std::pair<VeroneseSpec, std::vector<ExponentVector>>> fixtures{
      {{{1, 29}, 47}, {{47, 0}, {18, 1}, {7, 3}, {3, 8}, {2, 21}, {1, 34}, {0, 47}}},
      {{{3, 4, 5}, 6}, {{2, 0, 0}, {1, 1, 1}, {0, 3, 0}, {1, 0, 3}, {0, 2, 2}, {0, 1, 4}, {0, 0, 6}}},
      {{{3, 4, 5}, 15}, {{5, 0, 0}, {2, 1, 1}, {1, 3, 0}, {0, 0, 3}, {0, 5, 2}, {0, 10, 1}, {0, 15, 0}}},
      {{{1, 6, 15}, 10}, {{10, 0, 0}, {4, 1, 0}, {5, 0, 1}, {2, 3, 0}, {3, 2, 1}, {0, 5, 0}, {0, 0, 2}, {1, 4, 1}}},
  };
  Outcome o;
  for (const auto& [spec, want] : fixtures) {
    std::string weights;
    for (auto w : spec.weights) weights += (weights.empty() ? "" : ",") + std::to_string(w);
    std::string out;
    if (invoke({"gens", "--weights", weights, "--degree", std::to_string(spec.degree), "--json"}, out) != 0) {
      o.fail(spec_label(spec) + ": gens failed");
      continue;
    }
    const auto j = json::parse(out);
    if (point_set(cli::points_from_json(j.at("generators"))) != point_set(want)) o.fail(spec_label(spec) + " differs");
    if (!j.at("complete").get<bool>()) o.fail(spec_label(spec) + " not certified complete");
  }
  if (o.pass) o.detail = "4 published generator sets reproduced";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::size_t s = 7;
  const std::vector<Binomial> listed{
      {mono(s, {{2, 2}}), mono(s, {{1, 1}, {5, 1}})}, {mono(s, {{3, 1}, {4, 1}}), mono(s, {{2, 1}, {5, 1}})},
      {mono(s, {{2, 1}, {4, 1}}), mono(s, {{1, 1}, {6, 1}})}, {mono(s, {{5, 2}}), mono(s, {{3, 1}, {6, 1}})},
      {mono(s, {{4, 1}, {5, 1}}), mono(s, {{2, 1}, {6, 1}})}, {mono(s, {{4, 2}}), mono(s, {{1, 1}, {7, 1}})},
      {mono(s, {{5, 1}, {6, 1}}), mono(s, {{3, 1}, {7, 1}})}, {mono(s, {{4, 1}, {6, 1}}), mono(s, {{2, 1}, {7, 1}})},
      {mono(s, {{6, 2}}), mono(s, {{5, 1}, {7, 1}})}};
  std::string out;
  if (invoke({"toric", "--weights", "3,4,5", "--degree", "6", "--json"}, out) != 0) {
    o.fail("toric V_(3,4,5),6 failed");
    return o;
  }
  std::vector<Binomial> got;
  const auto quadrics = json::parse(out);
  for (const auto& b : quadrics.at("minimal")) got.push_back(cli::binomial_from_json(b, s));
  bool all_found = got.size() == listed.size();
  for (const auto& want : listed) {
    all_found = all_found && std::any_of(got.begin(), got.end(), [&](const Binomial& b) {
      return same_binomial_up_to_sign(b, want);
    });
  }
  if (!all_found) o.fail("V_(3,4,5),6: " + std::to_string(got.size()) + " minimal relations, not the listed 9");

  if (invoke({"toric", "--weights", "3,4,5", "--degree", "15", "--json"}, out) != 0) {
    o.fail("toric V_(3,4,5),15 failed");
    return o;
  }
  const Binomial cubic{mono(s, {{2, 3}}), mono(s, {{1, 1}, {3, 1}, {4, 1}})};
  bool found = false;
  const auto cubic_basis = json::parse(out);
  for (const auto& b : cubic_basis.at("basis")) found = found || same_binomial_up_to_sign(cli::binomial_from_json(b, s), cubic);
  if (!found) o.fail("t2^3 - t1 t3 t4 missing from the reduced basis of V_(3,4,5),15");
  if (o.pass) o.detail = "9 quadrics exact; cubic relation present";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t specs = 0, oracle_checked = 0;
  for (const auto& spec : planar_corpus_specs()) {
    const auto g = veronese_generators_2d(spec);
    if (g.size() > kMaxPlanarSize || g.size() < 2) continue;
    ++specs;
    const auto m = fill_skeleton(build_skeleton(ConvexSequence(g.gens())), g);
    for (const auto& b : minors_2x2(m)) {
      if (!oracle::same_image(g.gens(), b.plus, b.minus)) o.fail(spec_label(spec) + ": minor does not vanish");
    }
    const std::size_t s = g.size();
    if (minimal_minors(m).size() != (s - 1) * (s - 2) / 2) o.fail(spec_label(spec) + ": wrong minimal minor count");
    const auto check = verify_presentation(m, g, kOracleCap);
    if (s <= kOracleCap) {
      ++oracle_checked;
      if (!check.ideal_equal.value_or(false)) o.fail(spec_label(spec) + ": ideal differs from the toric ideal");
    }
  }
  if (specs < kMinPlanarSpecs) o.fail("only " + std::to_string(specs) + " planar specs with s <= 10");
  if (o.pass) o.detail = std::to_string(specs) + " specs, " + std::to_string(oracle_checked) + " against the toric oracle";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& spec : planar_corpus_specs()) {
    const auto g = veronese_generators_2d(spec);
    if (g.size() < 3 || g.size() > kOracleCap) continue;
    ++checked;
    std::string out;
    const int code = invoke({"gb-check", "--weights", std::to_string(spec.weights[0]) + "," + std::to_string(spec.weights[1]),
                             "--degree", std::to_string(spec.degree), "--json"},
                            out);
    if (code != 0) o.fail(spec_label(spec) + ": gb-check exit " + std::to_string(code));
  }
  if (o.pass) o.detail = std::to_string(checked) + " specs";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t hochster = 0, specs = 0;
  for (const auto& spec : planar_corpus_specs()) {
    const auto g = veronese_generators_2d(spec);
    const auto s = static_cast<std::int64_t>(g.size());
    ++specs;
    for (auto grading : {Grading::Standard, Grading::Weighted}) {
      const auto degrees = g.degrees(grading);
      const auto table = graded_betti(degrees, grading);
      for (std::int64_t i = 0; i <= s; ++i) {
        if (table.total(i) != total_betti(s, i)) o.fail(spec_label(spec) + ": row sum " + std::to_string(i));
      }
      if (g.size() <= kOracleCap) {
        ++hochster;
        if (table.entries() != oracle::hochster_betti(degrees)) o.fail(spec_label(spec) + ": Hochster mismatch");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(specs) + " specs, " + std::to_string(hochster) + " graded tables vs Hochster";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t specs = 0;
  for (const auto& spec : planar_corpus_specs()) {
    const auto g = veronese_generators_2d(spec);
    const auto coeffs = expand_series(hilbert_series(g.degrees(Grading::Weighted)), kHilbertTerms);
    ++specs;
    for (std::size_t N = 0; N <= kHilbertTerms; ++N) {
      const auto n = static_cast<std::int64_t>(N);
      const mpz_class want = n % spec.degree == 0 ? oracle::weighted_count(spec.weights, n) : mpz_class(0);
      if (coeffs[N] != want) {
        o.fail(spec_label(spec) + ": coefficient of t^" + std::to_string(N));
        break;
      }
    }
  }
  if (specs < kMinHilbertSpecs) o.fail("only " + std::to_string(specs) + " specs");
  if (o.pass) o.detail = std::to_string(specs) + " specs to t^" + std::to_string(kHilbertTerms);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t specs = 0;
  for (const auto& spec : planar_corpus_specs()) {
    const auto g = veronese_generators_2d(spec);
    const auto s = static_cast<std::int64_t>(g.size());
    ++specs;
    const std::vector<oracle::Point> pts(g.gens().begin(), g.gens().end());
    for (int k = 1; k <= kMaxFiberPower; ++k) {
      const auto got = fiber_power_generator_count(g.gens(), k);
      if (got != k * (s - 1) + 1) o.fail(spec_label(spec) + ": k = " + std::to_string(k));
      if (s <= 10 && got != static_cast<std::int64_t>(oracle::power_generator_count(pts, k))) {
        o.fail(spec_label(spec) + ": brute-force count differs at k = " + std::to_string(k));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(specs) + " ideals, k <= " + std::to_string(kMaxFiberPower);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t planar = 0;
  for (const auto& spec : planar_corpus_specs()) {
    const auto g = veronese_generators_2d(spec);
    if (g.size() > kOracleCap) continue;
    ++planar;
    if (quadratic_defect(g).defect != 0) o.fail(spec_label(spec) + ": positive defect");
    if (certify_koszul_quadratic_gb(g).status != KoszulStatus::Certified) o.fail(spec_label(spec) + ": not certified");
  }
  {
    const auto g = veronese_generators_nd({{3, 4, 5}, 15}).gens;
    const auto r = quadratic_defect(g);
    const std::size_t s = g.size();
    const Binomial want{mono(s, {{2, 3}}), mono(s, {{1, 1}, {3, 1}, {4, 1}})};
    bool witness_ok = false;
    if (r.witness && r.witness->size() == 2) {
      const auto& t = r.witness->terms();
      witness_ok = t[0].coeff == -t[1].coeff && same_binomial_up_to_sign({t[0].exponents, t[1].exponents}, want);
    }
    if (r.defect == 0 || !witness_ok) o.fail("V_(3,4,5),15: expected witness t2^3 - t1 t3 t4");
  }
  for (std::int64_t k = 1; k <= 3; ++k) {
    const auto inst = nonkoszul_family_instance(1, k);
    if (quadratic_defect(veronese_generators_nd({inst.probe_weights, inst.spec.degree}).gens).defect == 0) {
      o.fail("family 1, k = " + std::to_string(k));
    }
  }
  for (std::int64_t f = 2; f <= 4; ++f) {
    const auto inst = nonkoszul_family_instance(2, f);
    if (quadratic_defect(veronese_generators_nd({inst.probe_weights, inst.spec.degree}).gens).defect == 0) {
      o.fail("family 2, f = " + std::to_string(f));
    }
  }
  for (std::int64_t f = 2; f <= 6; ++f) {
    const auto inst = nonkoszul_family_instance(2, f);
    if (point_set(weighted_monomials_of_degree(inst.probe_weights, inst.spec.degree)) != point_set(family2_degree_piece(f))) {
      o.fail("family 2 degree piece, f = " + std::to_string(f));
    }
  }
  if (o.pass) o.detail = std::to_string(planar) + " planar specs Koszul; 6 family probes non-Koszul";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t pairs = 0, two = 0;
  for (std::int64_t d = 2; d <= kMaxClassifyDegree; ++d) {
    for (std::int64_t c = 1; c < d; ++c) {
      if (std::gcd(c, d) != 1) continue;
      ++pairs;
      const bool classified = two_segment_classify(c, d).two_segment;
      const auto corners = corner_points(ConvexSequence(veronese_generators_2d({{1, c}, d}).gens())).size();
      two += classified;
      if (classified != (corners <= 3)) o.fail("(c,d) = (" + std::to_string(c) + "," + std::to_string(d) + ")");
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " coprime pairs, " + std::to_string(two) + " with at most two segments";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(kConeSeed);
  std::uniform_int_distribution<std::int64_t> coord(-8, 8), pick(0, 3);
  int tested = 0;
  while (tested < kRandomCones) {
    const std::array<std::int64_t, 2> u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)};
    if (std::gcd(u[0], u[1]) != 1 || std::gcd(v[0], v[1]) != 1 || u[0] * v[1] == u[1] * v[0]) continue;
    ++tested;
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    for (int step = 0; step < 6; ++step) {
      switch (pick(rng)) {
        case 0: a += c; b += d; break;
        case 1: c -= a; d -= b; break;
        case 2: std::swap(a, c); std::swap(b, d); break;
        default: a = -a; b = -b; break;
      }
    }
    auto apply = [&](std::array<std::int64_t, 2> x) {
      return std::array<std::int64_t, 2>{a * x[0] + b * x[1], c * x[0] + d * x[1]};
    };
    const auto nc = normalize_cone({u, v});
    if (!(normalize_cone({apply(u), apply(v)}) == nc)) o.fail("normal form changed under a unimodular map");
    // d = 1 is the smooth cone: the polynomial ring on two generators.
    const std::size_t generators = nc.d == 1 ? 2 : veronese_generators_2d({{1, nc.c}, nc.d}).size();
    if (generators != oracle::cone_hilbert_basis(u, v).size()) {
      o.fail("generator count differs for u = (" + std::to_string(u[0]) + "," + std::to_string(u[1]) + "), v = (" +
             std::to_string(v[0]) + "," + std::to_string(v[1]) + ")");
    }
  }
  if (o.pass) o.detail = std::to_string(tested) + " seeded cones";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
