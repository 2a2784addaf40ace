#include "veronese_cli/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "veronese/errors.hpp"
#include "veronese/invariants.hpp"
#include "veronese/koszul.hpp"
#include "veronese/presentation.hpp"
#include "veronese_cli/json_io.hpp"

namespace veronese::cli {

namespace {

using Outcome = std::optional<std::string>;  // failure detail, nullopt on pass

std::string points_text(const std::vector<ExponentVector>& pts) {
  return points_to_json(pts).dump();
}

std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

class Runner {
 public:
  Runner(std::string entry, std::vector<CorpusCheck>& out) : entry_(std::move(entry)), out_(out) {}

  void check(const std::string& name, const std::string& source, const std::function<Outcome()>& f) {
    const auto start = std::chrono::steady_clock::now();
    CorpusCheck c{entry_, name, false, "", source, 0};
    try {
      const Outcome failure = f();
      c.pass = !failure;
      if (failure) c.detail = *failure;
    } catch (const BudgetError& e) {
      c.detail = std::string("budget exceeded: ") + e.what();
    } catch (const Error& e) {
      c.detail = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(c));
  }

 private:
  std::string entry_;
  std::vector<CorpusCheck>& out_;
};

std::string source_of(const nlohmann::json& expected, const char* key) {
  return expected.at(key).value("source", "");
}

Outcome compare_sets(std::vector<ExponentVector> got, std::vector<ExponentVector> want) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got == want) return std::nullopt;
  std::vector<ExponentVector> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  return "missing " + points_text(missing) + ", unexpected " + points_text(extra);
}

/// 2^s enumeration of 1 + sum (-1)^{|A|+1} gap(A) t^{sum d}.
std::vector<mpz_class> brute_numerator(const std::vector<std::int64_t>& d) {
  const std::size_t s = d.size();
  std::vector<mpz_class> p(1, 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
    std::vector<std::size_t> subset;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask >> i & 1) {
        subset.push_back(i);
        sum += d[i];
      }
    }
    const std::int64_t g = gap_number(subset, s);
    if (g == 0) continue;
    if (static_cast<std::size_t>(sum) >= p.size()) p.resize(sum + 1);
    p[sum] += (subset.size() % 2 == 0 ? -1 : 1) * g;
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool any_projection_convex(const std::vector<ExponentVector>& gens) {
  const std::size_t n = gens.front().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      std::vector<LatticePoint> proj;
      for (const auto& g : gens) proj.push_back({g[a], g[b]});
      // Ties in the first coordinate may be ordered either way.
      for (bool ascending_ties : {true, false}) {
        auto pts = proj;
        std::sort(pts.begin(), pts.end(), [&](const LatticePoint& p, const LatticePoint& q) {
          if (p[0] != q[0]) return p[0] > q[0];
          return ascending_ties ? p[1] < q[1] : p[1] > q[1];
        });
        if (is_convex_sequence(pts)) return true;
      }
    }
  }
  return false;
}

void run_planar(Runner& run, const SemigroupGens& gens, const nlohmann::json& expected,
                const CorpusOptions& opt) {
  const std::size_t s = gens.size();
  std::optional<ConvexSequence> seq;
  run.check("convex", "", [&]() -> Outcome {
    seq.emplace(gens.gens());
    return std::nullopt;
  });
  if (!seq) return;
  const SemigroupGens ordered(seq->points(), gens.veronese());

  if (expected.contains("corners")) {
    run.check("corners", source_of(expected, "corners"), [&]() -> Outcome {
      std::vector<std::size_t> got;
      for (auto c : corner_points(*seq)) got.push_back(c + 1);
      const auto want = expected.at("corners").at("value").get<std::vector<std::size_t>>();
      if (got == want) return std::nullopt;
      return "got " + nlohmann::json(got).dump() + ", expected " + nlohmann::json(want).dump();
    });
  }

  std::optional<PresentationMatrix> filled;
  run.check("presentation", "", [&]() -> Outcome {
    filled = fill_skeleton(build_skeleton(*seq), ordered);
    const auto check = verify_presentation(*filled, ordered, 0);
    if (!check.vanishes) {
      return "minor " + check.witness->to_polynomial(TermOrder::lex(s)).to_string() + " does not vanish";
    }
    const auto count = static_cast<std::int64_t>(minimal_minors(*filled).size());
    if (count != choose2(static_cast<std::int64_t>(s) - 1)) return "wrong number of minimal minors";
    return std::nullopt;
  });

  if (filled && s <= opt.oracle_cap) {
    const TermOrder lex = TermOrder::lex(s);
    run.check("ideal-equality", "", [&]() -> Outcome {
      const auto check = verify_presentation(*filled, ordered, opt.oracle_cap, opt.budget);
      if (!check.ok()) return std::string("minors and toric ideal differ");
      return std::nullopt;
    });
    run.check("groebner", "", [&]() -> Outcome {
      std::vector<Polynomial> polys;
      for (const auto& b : minimal_minors(*filled)) polys.push_back(b.to_polynomial(lex));
      if (!is_groebner_basis(polys, lex, opt.budget)) return std::string("not a lex Groebner basis");
      std::set<Monomial> want;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 2; j < s; ++j) {
          Monomial m(s, 0);
          m[i] = m[j] = 1;
          want.insert(m);
        }
      }
      const auto in = initial_ideal(polys, lex);
      if (std::set<Monomial>(in.begin(), in.end()) != want) return std::string("initial ideal differs");
      return std::nullopt;
    });
  }

  run.check("betti-totals", expected.contains("betti_totals") ? source_of(expected, "betti_totals") : "",
            [&]() -> Outcome {
              const auto std_table = graded_betti(ordered.degrees(Grading::Standard), Grading::Standard);
              std::vector<std::string> totals;
              for (std::int64_t i = 1; i <= static_cast<std::int64_t>(s) - 2; ++i) {
                if (std_table.total(i) != total_betti(static_cast<std::int64_t>(s), i)) {
                  return "row " + std::to_string(i) + " sums to " + std_table.total(i).get_str();
                }
                totals.push_back(std_table.total(i).get_str());
              }
              if (ordered.veronese()) {
                const auto w_table = graded_betti(ordered.degrees(Grading::Weighted), Grading::Weighted);
                for (std::int64_t i = 0; i <= static_cast<std::int64_t>(s); ++i) {
                  if (w_table.total(i) != std_table.total(i)) return std::string("gradings disagree");
                }
              }
              if (expected.contains("betti_totals") &&
                  expected.at("betti_totals").at("value").get<std::vector<std::string>>() != totals) {
                return "totals " + nlohmann::json(totals).dump();
              }
              return std::nullopt;
            });

  if (s <= 16) {
    run.check("hilbert-numerator", "", [&]() -> Outcome {
      const auto d = ordered.degrees(Grading::Standard);
      if (hilbert_series(d).numerator != brute_numerator(d)) return std::string("numerators differ");
      return std::nullopt;
    });
  }

  if (ordered.veronese()) {
    run.check("hilbert-oracle", "", [&]() -> Outcome {
      const auto& spec = *ordered.veronese();
      const auto coeffs = expand_series(hilbert_series(ordered.degrees(Grading::Weighted)), opt.hilbert_terms);
      for (std::size_t k = 0; k <= opt.hilbert_terms; ++k) {
        const std::int64_t K = static_cast<std::int64_t>(k);
        const mpz_class direct =
            K % spec.degree == 0 ? mpz_class(static_cast<long>(monomials_of_weighted_degree(spec.weights, K).size()))
                                 : mpz_class(0);
        if (coeffs[k] != direct) {
          return "t^" + std::to_string(k) + ": series " + coeffs[k].get_str() + ", count " + direct.get_str();
        }
      }
      return std::nullopt;
    });
  }

  run.check("fiber-count", "", [&]() -> Outcome {
    for (std::int64_t k = 0; k <= opt.fiber_powers; ++k) {
      const auto got = fiber_power_generator_count(ordered.gens(), k);
      if (got != k * (static_cast<std::int64_t>(s) - 1) + 1) {
        return "I^" + std::to_string(k) + " has " + std::to_string(got) + " generators";
      }
    }
    return std::nullopt;
  });

  if (s <= opt.defect_cap) {
    run.check("koszul", expected.contains("defect_positive") ? source_of(expected, "defect_positive") : "",
              [&]() -> Outcome {
                DefectOptions dopt;
                dopt.max_generators = opt.defect_cap;
                const auto report = quadratic_defect(ordered, dopt);
                if (report.defect != 0) return "defect " + std::to_string(report.defect);
                if (s <= opt.oracle_cap) {
                  const auto cert = certify_koszul_quadratic_gb(ordered, opt.budget);
                  if (cert.status != KoszulStatus::Certified) return "certification: " + cert.reason;
                }
                return std::nullopt;
              });
  }
}

void run_spatial(Runner& run, const SemigroupGens& gens, const nlohmann::json& expected,
                 const CorpusOptions& opt) {
  const std::size_t s = gens.size();
  if (expected.contains("convex")) {
    run.check("convex-projections", source_of(expected, "convex"), [&]() -> Outcome {
      const bool want = expected.at("convex").at("value").get<bool>();
      if (!want && any_projection_convex(gens.gens())) return std::string("a projection is convex");
      return std::nullopt;
    });
  }
  std::optional<BinomialIdeal> toric;
  if (s <= 10 && (expected.contains("minimal_relations") || expected.contains("relation"))) {
    run.check("toric", "", [&]() -> Outcome {
      ToricOptions topt;
      topt.budget = opt.budget;
      toric = toric_ideal(gens, topt);
      for (const auto& b : toric->binomials()) {
        if (!vanishes(b, gens)) return "basis element does not vanish";
      }
      return std::nullopt;
    });
  }
  if (toric && expected.contains("minimal_relations")) {
    run.check("minimal-relations", source_of(expected, "minimal_relations"), [&]() -> Outcome {
      const auto got = minimal_toric_generators(gens, *toric);
      std::vector<Binomial> want;
      for (const auto& b : expected.at("minimal_relations").at("value")) want.push_back(binomial_from_json(b, s));
      if (got.size() != want.size()) return "got " + std::to_string(got.size()) + " minimal relations";
      for (const auto& w : want) {
        const bool found = std::any_of(got.begin(), got.end(), [&](const Binomial& g) { return g.same_up_to_sign(w); });
        if (!found) return "missing " + nlohmann::json(to_json(w)).dump();
      }
      return std::nullopt;
    });
  }
  if (toric && expected.contains("relation")) {
    run.check("relation", source_of(expected, "relation"), [&]() -> Outcome {
      const Binomial want = binomial_from_json(expected.at("relation").at("value"), s);
      const auto basis = toric->binomials();
      const bool in_basis =
          std::any_of(basis.begin(), basis.end(), [&](const Binomial& g) { return g.same_up_to_sign(want); });
      if (!in_basis) return std::string("relation missing from the reduced basis");
      return std::nullopt;
    });
  }
  if (expected.contains("defect_positive") && s <= opt.defect_cap) {
    run.check("koszul", source_of(expected, "defect_positive"), [&]() -> Outcome {
      DefectOptions dopt;
      dopt.max_generators = opt.defect_cap;
      const auto report = quadratic_defect(gens, dopt);
      const bool want = expected.at("defect_positive").at("value").get<bool>();
      if ((report.defect > 0) != want) return "defect " + std::to_string(report.defect);
      if (want && expected.contains("witness")) {
        const Binomial w = binomial_from_json(expected.at("witness").at("value"), s);
        const TermOrder lex = TermOrder::lex(s);
        const Polynomial p = w.to_polynomial(lex);
        if (!report.witness || (*report.witness != p && *report.witness != -p)) {
          return "witness " + (report.witness ? report.witness->to_string() : std::string("absent"));
        }
      }
      return std::nullopt;
    });
  }
}

}  // namespace

std::vector<CorpusCheck> verify_corpus(const nlohmann::json& corpus, const CorpusOptions& opt) {
  std::vector<CorpusCheck> out;
  for (const auto& entry : corpus.at("entries")) {
    const std::string name = entry.at("name").get<std::string>();
    Runner run(name, out);
    const nlohmann::json expected = entry.value("expected", nlohmann::json::object());

    std::optional<SemigroupGens> gens;
    std::optional<VeroneseSpec> spec;
    run.check("generators", expected.contains("generators") ? source_of(expected, "generators") : "",
              [&]() -> Outcome {
                if (entry.contains("family")) {
                  const auto& fam = entry.at("family");
                  const auto inst = nonkoszul_family_instance(fam.at("family").get<int>(),
                                                              fam.at("param").get<std::int64_t>());
                  spec = VeroneseSpec{inst.probe_weights, inst.spec.degree};
                } else if (entry.contains("spec")) {
                  spec = VeroneseSpec{entry.at("spec").at("weights").get<std::vector<std::int64_t>>(),
                                      entry.at("spec").at("degree").get<std::int64_t>()};
                }
                if (spec && spec->dimension() == 2) {
                  gens = veronese_generators_2d(*spec);
                } else if (spec) {
                  const auto en = veronese_generators_nd(*spec);
                  if (!en.complete) return std::string("enumeration is not certified complete");
                  gens = en.gens;
                } else {
                  gens = gens_from_json(entry);
                }
                if (expected.contains("generators")) {
                  return compare_sets(gens->gens(), points_from_json(expected.at("generators").at("value")));
                }
                return std::nullopt;
              });
    if (!gens) continue;
    if (entry.contains("family") && entry.at("family").at("family").get<int>() == 2) {
      run.check("family-piece", "", [&]() -> Outcome {
        const auto f = entry.at("family").at("param").get<std::int64_t>();
        return compare_sets(weighted_monomials_of_degree(spec->weights, spec->degree), family2_degree_piece(f));
      });
    }
    if (gens->dimension() == 2) {
      run_planar(run, *gens, expected, opt);
    } else {
      run_spatial(run, *gens, expected, opt);
    }
  }
  return out;
}

nlohmann::json random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(1, 12), degree(2, 40);
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  nlohmann::json entries = nlohmann::json::array();
  // Each spec is drawn independently; the cap avoids spinning on tiny ranges.
  for (std::size_t attempts = 0; entries.size() < count && attempts < 100000; ++attempts) {
    const auto w1 = weight(rng), w2 = weight(rng), d = degree(rng);
    const auto s = veronese_generators_2d({{w1, w2}, d}).size();
    if (s < 3 || s > 8 || !seen.insert({w1, w2, d}).second) continue;
    entries.push_back({{"name", "random-" + std::to_string(entries.size() + 1) + " V_(" +
                                    std::to_string(w1) + "," + std::to_string(w2) + ")," + std::to_string(d)},
                       {"spec", {{"weights", {w1, w2}}, {"degree", d}}}});
  }
  return {{"entries", std::move(entries)}};
}

}  // namespace veronese::cli
