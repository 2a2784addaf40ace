#include "veronese_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "veronese/errors.hpp"
#include "veronese/groebner.hpp"
#include "veronese/invariants.hpp"
#include "veronese/koszul.hpp"
#include "veronese/presentation.hpp"
#include "veronese_cli/corpus.hpp"
#include "veronese_cli/json_io.hpp"

#ifndef VERONESE_DEFAULT_CORPUS
#define VERONESE_DEFAULT_CORPUS "data/corpus.json"
#endif

namespace veronese::cli {

namespace {

/// Raised by a subcommand whose computation finished but whose check failed.
struct VerificationFailure {
  int code = kVerificationFailure;
};

struct Common {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
  bool json = false;
  std::size_t budget_pairs = GroebnerBudget{}.max_pairs;
  Exponent budget_degree = GroebnerBudget{}.max_degree;
  std::string gens_file;

  GroebnerBudget budget() const {
    GroebnerBudget b;
    b.max_pairs = budget_pairs;
    b.max_degree = budget_degree;
    return b;
  }
  VeroneseSpec spec() const {
    if (weights.empty() || degree == 0) throw InputError("--weights and --degree are required");
    VeroneseSpec s{weights, degree};
    s.validate();
    return s;
  }
};

void add_spec_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--weights", c.weights, "comma-separated weights")->delimiter(',');
  cmd->add_option("--degree", c.degree, "Veronese degree d");
  cmd->add_flag("--json", c.json, "emit JSON");
}

void add_budget_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget-pairs", c.budget_pairs, "maximum S-pairs per Buchberger run");
  cmd->add_option("--budget-degree", c.budget_degree, "maximum polynomial degree");
}

/// Generators for a spec: the congruence scan in 2D, degree enumeration otherwise.
GeneratorEnumeration enumerate(const VeroneseSpec& spec, std::optional<std::int64_t> bound) {
  if (spec.dimension() == 2 && !bound) {
    return {veronese_generators_2d(spec), default_multiple_bound(spec), true};
  }
  return veronese_generators_nd(spec, bound);
}

SemigroupGens load_gens(const Common& c) {
  if (!c.gens_file.empty()) {
    std::ifstream in(c.gens_file);
    if (!in) throw InputError("cannot open " + c.gens_file);
    return gens_from_json(json::parse(in));
  }
  return enumerate(c.spec(), std::nullopt).gens;
}

std::string spec_name(const VeroneseSpec& spec) {
  std::string w;
  for (auto x : spec.weights) w += (w.empty() ? "" : ",") + std::to_string(x);
  return "V_{(" + w + ")," + std::to_string(spec.degree) + "}";
}

std::string binomial_text(const Binomial& b) {
  return monomial_to_string(b.plus) + " - " + monomial_to_string(b.minus);
}

std::string point_text(const ExponentVector& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

ConvexSequence planar_sequence(const SemigroupGens& gens) {
  if (gens.dimension() != 2) throw PreconditionError("presentations need two-dimensional generators");
  auto pts = gens.gens();
  std::sort(pts.begin(), pts.end(), std::greater<>());
  return ConvexSequence(pts);
}

// ---- subcommands -------------------------------------------------------------

int cmd_gens(const Common& c, std::optional<std::int64_t> bound, std::ostream& out) {
  const auto spec = c.spec();
  const auto en = enumerate(spec, bound);
  if (c.json) {
    json j = to_json(en.gens, en.complete);
    j["multiple_bound"] = en.multiple_bound;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << spec_name(spec) << ": " << en.gens.size() << " generators ("
      << (en.complete ? "complete" : "degrees up to " + std::to_string(en.multiple_bound * spec.degree)) << ")\n";
  const auto degrees = en.gens.degrees(Grading::Weighted);
  for (std::size_t i = 0; i < en.gens.size(); ++i) {
    out << "  t" << i + 1 << "  " << point_text(en.gens[i]) << "  degree " << degrees[i] << "\n";
  }
  return kOk;
}

int cmd_present(const Common& c, bool two_segment, std::ostream& out) {
  const auto spec = c.spec();
  PresentationMatrix matrix(1, 1, 1);
  std::optional<SemigroupGens> gens;
  if (two_segment) {
    if (spec.dimension() != 2 || spec.weights[0] != 1) {
      throw InputError("--two-segment needs weights 1,c");
    }
    const auto ts = two_segment_matrix(two_segment_classify(spec.weights[1] % spec.degree, spec.degree));
    matrix = ts.matrix;
    gens = ts.gens;
  } else {
    gens = veronese_generators_2d(spec);
    matrix = fill_skeleton(build_skeleton(planar_sequence(*gens)), *gens);
  }
  const auto check = verify_presentation(matrix, *gens, 8, c.budget());
  const auto minors = minors_2x2(matrix);
  if (c.json) {
    json j{{"matrix", to_json(matrix)}, {"generators", points_to_json(gens->gens())}};
    j["minors"] = json::array();
    for (const auto& b : minors) j["minors"].push_back(to_json(b));
    j["vanishes"] = check.vanishes;
    j["ideal_equal"] = check.ideal_equal ? json(*check.ideal_equal) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << matrix.to_string();
    out << minors.size() << " minors\n";
    for (const auto& b : minors) out << "  " << binomial_text(b) << "\n";
    out << "vanishing: " << (check.vanishes ? "yes" : "no") << "\n";
    if (check.witness) out << "witness: " << binomial_text(*check.witness) << "\n";
    if (check.ideal_equal) out << "equals toric ideal: " << (*check.ideal_equal ? "yes" : "no") << "\n";
  }
  if (!check.ok()) throw VerificationFailure{};
  return kOk;
}

int cmd_two_segment(std::int64_t cc, std::int64_t d, bool as_json, std::ostream& out) {
  const auto ts = two_segment_classify(cc, d);
  json j{{"c", ts.c}, {"d", ts.d}, {"m", ts.m}, {"r", ts.r}, {"q", ts.q}, {"two_segment", ts.two_segment}};
  std::optional<TwoSegmentPresentation> pres;
  if (ts.two_segment) pres = two_segment_matrix(ts);
  if (as_json) {
    if (pres) {
      j["matrix"] = to_json(pres->matrix);
      j["generators"] = points_to_json(pres->gens.gens());
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "d = " << d << " = " << cc << "*" << ts.m << " + " << ts.r << ": "
      << (ts.two_segment ? "at most two segments" : "more than two segments");
  if (ts.two_segment) out << ", q = " << ts.q;
  out << "\n";
  if (pres) {
    for (std::size_t i = 0; i < pres->gens.size(); ++i) {
      out << "  t" << i + 1 << " -> x^" << pres->gens[i][0] << " y^" << pres->gens[i][1] << "\n";
    }
    out << pres->matrix.to_string();
  }
  return kOk;
}

int cmd_toric(const Common& c, const std::string& order_name, std::ostream& out) {
  const auto gens = load_gens(c);
  if (order_name != "lex") throw InputError("only --order lex is supported");
  ToricOptions opt;
  opt.budget = c.budget();
  const auto ideal = toric_ideal(gens, opt);
  const auto minimal = minimal_toric_generators(gens, ideal);
  if (c.json) {
    json j{{"generators", points_to_json(gens.gens())}, {"order", order_name}};
    j["basis"] = json::array();
    for (const auto& b : ideal.binomials()) j["basis"].push_back(to_json(b));
    j["minimal"] = json::array();
    for (const auto& b : minimal) j["minimal"].push_back(to_json(b));
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "reduced lex basis (" << ideal.generators().size() << "):\n";
  for (const auto& b : ideal.binomials()) out << "  " << binomial_text(b) << "\n";
  out << "minimal generators (" << minimal.size() << "):\n";
  for (const auto& b : minimal) out << "  " << binomial_text(b) << "\n";
  return kOk;
}

int cmd_gb_check(const Common& c, std::ostream& out) {
  const auto spec = c.spec();
  const auto gens = veronese_generators_2d(spec);
  const auto filled = fill_skeleton(build_skeleton(planar_sequence(gens)), gens);
  const std::size_t s = gens.size();
  const TermOrder lex = TermOrder::lex(s);
  std::vector<Polynomial> polys;
  for (const auto& b : minimal_minors(filled)) polys.push_back(b.to_polynomial(lex));
  const bool gb = is_groebner_basis(polys, lex, c.budget());
  const auto in = initial_ideal(polys, lex);
  std::set<Monomial> want;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 2; j < s; ++j) {
      Monomial m(s, 0);
      m[i] = m[j] = 1;
      want.insert(m);
    }
  }
  const bool in_ok = std::set<Monomial>(in.begin(), in.end()) == want;
  if (c.json) {
    json j{{"groebner", gb}, {"initial_ideal_expected", in_ok}};
    j["initial_ideal"] = json::array();
    for (const auto& m : in) j["initial_ideal"].push_back(monomial_to_string(m));
    out << j.dump(2) << "\n";
  } else {
    out << polys.size() << " minimal minors, lex Groebner basis: " << (gb ? "yes" : "no") << "\n";
    out << "initial ideal:";
    for (const auto& m : in) out << " " << monomial_to_string(m);
    out << "\ninitial ideal is {t_i t_j : j > i+1}: " << (in_ok ? "yes" : "no") << "\n";
  }
  if (!gb || !in_ok) throw VerificationFailure{};
  return kOk;
}

Grading parse_grading(const std::string& g) {
  if (g == "standard") return Grading::Standard;
  if (g == "weighted") return Grading::Weighted;
  throw InputError("--grading must be standard or weighted");
}

int cmd_betti(const Common& c, const std::string& grading_name, std::ostream& out) {
  const auto gens = load_gens(c);
  const Grading grading = parse_grading(grading_name);
  const auto table = graded_betti(gens.degrees(grading), grading);
  const auto s = static_cast<std::int64_t>(gens.size());
  bool totals_ok = true;
  std::vector<mpz_class> totals;
  for (std::int64_t i = 0; i <= std::max<std::int64_t>(table.max_index(), 0); ++i) {
    totals.push_back(table.total(i));
    totals_ok = totals_ok && table.total(i) == total_betti(s, i);
  }
  if (c.json) {
    json j = to_json(table);
    j["totals"] = big_list(totals);
    j["totals_match_closed_form"] = totals_ok;
    out << j.dump(2) << "\n";
  } else {
    out << "graded Betti numbers (" << grading_name << " grading), s = " << s << "\n";
    for (const auto& [key, mult] : table.entries()) {
      out << "  beta_{" << key.first << "," << key.second << "} = " << mult.get_str() << "\n";
    }
    out << "totals:";
    for (const auto& t : totals) out << " " << t.get_str();
    out << "\nmatch i*C(s-1,i+1): " << (totals_ok ? "yes" : "no") << "\n";
  }
  if (!totals_ok) throw VerificationFailure{};
  return kOk;
}

int cmd_hilbert(const Common& c, const std::string& grading_name, std::size_t expand, bool do_reduce,
                std::ostream& out) {
  const auto gens = load_gens(c);
  auto hs = hilbert_series(gens.degrees(parse_grading(grading_name)));
  if (do_reduce) hs = reduce(hs);
  std::vector<mpz_class> coeffs;
  if (expand > 0) coeffs = expand_series(hs, expand);
  if (c.json) {
    json j = to_json(hs);
    if (expand > 0) j["expansion"] = big_list(coeffs);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << hs.to_string() << "\n";
  if (expand > 0) {
    out << "coefficients t^0..t^" << expand << ":";
    for (const auto& k : coeffs) out << " " << k.get_str();
    out << "\n";
  }
  return kOk;
}

int cmd_koszul_probe(const Common& c, std::size_t max_gens, std::ostream& out) {
  const auto gens = load_gens(c);
  DefectOptions opt;
  opt.max_generators = max_gens;
  const auto report = quadratic_defect(gens, opt);
  std::optional<KoszulCertification> cert;
  if (gens.size() <= 10) cert = certify_koszul_quadratic_gb(gens, c.budget());
  if (c.json) {
    json j = to_json(report);
    j["generators"] = points_to_json(gens.gens());
    if (cert) j["certification"] = {{"status", to_string(cert->status)}, {"reason", cert->reason}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "dim R_2 = " << report.quadratic_relations << ", cubic kernel = " << report.cubic_kernel
      << ", quadratic closure = " << report.cubic_closure << ", defect = " << report.defect << "\n";
  if (report.witness) out << "witness: " << report.witness->to_string() << " (gr_m S is not Koszul)\n";
  if (cert) out << "quadratic Groebner certificate: " << to_string(cert->status) << " (" << cert->reason << ")\n";
  return kOk;
}

int cmd_koszul_family(int family, std::int64_t param, const std::vector<std::int64_t>& extra, bool as_json,
                      std::size_t max_gens, std::ostream& out) {
  const auto inst = nonkoszul_family_instance(family, param, extra);
  const VeroneseSpec probe{inst.probe_weights, inst.spec.degree};
  const auto en = veronese_generators_nd(probe);
  DefectOptions opt;
  opt.max_generators = max_gens;
  const auto report = quadratic_defect(en.gens, opt);
  std::optional<bool> piece_ok;
  if (family == 2) {
    auto got = weighted_monomials_of_degree(probe.weights, probe.degree);
    auto want = family2_degree_piece(param);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    piece_ok = got == want;
  }
  if (as_json) {
    json j{{"family", family}, {"parameter", param}, {"weights", inst.spec.weights},
           {"degree", inst.spec.degree}, {"probe_weights", inst.probe_weights},
           {"generators", points_to_json(en.gens.gens())}, {"defect", to_json(report)}};
    if (!inst.note.empty()) j["note"] = inst.note;
    if (piece_ok) j["degree_piece_matches"] = *piece_ok;
    out << j.dump(2) << "\n";
  } else {
    out << "family " << family << ", parameter " << param << ": " << spec_name(inst.spec) << "\n";
    if (!inst.note.empty()) out << "note: " << inst.note << "\n";
    out << "probe ring " << spec_name(probe) << " with " << en.gens.size() << " generators\n";
    out << "defect = " << report.defect;
    if (report.witness) out << ", witness " << report.witness->to_string();
    out << "\n";
    if (piece_ok) out << "four-monomial degree piece: " << (*piece_ok ? "matches" : "differs") << "\n";
  }
  if (report.defect == 0 || piece_ok == false) throw VerificationFailure{};
  return kOk;
}

int cmd_normalize_cone(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v, bool as_json,
                       std::ostream& out) {
  if (u.size() != 2 || v.size() != 2) throw DimensionError("--u and --v take two integers each");
  const auto nc = normalize_cone(ConeSpec{{u[0], u[1]}, {v[0], v[1]}});
  if (as_json) {
    out << json{{"c", nc.c}, {"d", nc.d}}.dump(2) << "\n";
  } else {
    out << "(c, d) = (" << nc.c << ", " << nc.d << "): V_{(1," << nc.c << ")," << nc.d << "}\n";
  }
  return kOk;
}

int cmd_corpus(const std::string& path, std::size_t random, std::uint64_t seed, bool timings, bool as_json,
               const GroebnerBudget& budget, std::ostream& out) {
  json corpus;
  if (random > 0) {
    corpus = random_corpus(random, seed);
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus " + path);
    corpus = json::parse(in);
  }
  CorpusOptions opt;
  opt.budget = budget;
  const auto checks = verify_corpus(corpus, opt);
  const std::size_t failed =
      static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CorpusCheck& c) { return !c.pass; }));
  if (as_json) {
    json rows = json::array();
    for (const auto& c : checks) {
      json row{{"entry", c.entry}, {"check", c.check}, {"pass", c.pass}};
      if (!c.source.empty()) row["source"] = c.source;
      if (!c.detail.empty()) row["detail"] = c.detail;
      if (timings) row["seconds"] = c.seconds;
      rows.push_back(std::move(row));
    }
    out << json{{"checks", rows}, {"failed", failed}, {"total", checks.size()}}.dump(2) << "\n";
  } else {
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.entry.size());
    for (const auto& c : checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.entry << "  "
          << std::setw(18) << c.check;
      if (!c.source.empty()) out << "  [" << c.source << "]";
      if (timings) out << "  " << std::fixed << std::setprecision(3) << c.seconds << "s";
      if (!c.pass) out << "  " << c.detail;
      out << "\n";
    }
    out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  }
  if (failed > 0) throw VerificationFailure{};
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Veronese and convex semigroup ring toolkit", "veronese"};
  app.require_subcommand(1, 1);
  Common common;
  std::function<int()> action;

  auto* gens = app.add_subcommand("gens", "minimal algebra generators of V_{w,d}");
  add_spec_options(gens, common);
  std::optional<std::int64_t> bound;
  gens->add_option("--bound", bound, "scan weighted degrees k*d for k <= K");
  gens->callback([&] { action = [&] { return cmd_gens(common, bound, out); }; });

  auto* present = app.add_subcommand("present", "determinantal presentation of a 2D Veronese ring");
  add_spec_options(present, common);
  add_budget_options(present, common);
  bool two_segment = false;
  present->add_flag("--two-segment", two_segment, "use the explicit two-segment matrix");
  present->callback([&] { action = [&] { return cmd_present(common, two_segment, out); }; });

  auto* two = app.add_subcommand("two-segment", "classify V_{(1,c),d} and print its explicit matrix");
  std::int64_t c_value = 0;
  two->add_option("--c", c_value, "second weight c")->required();
  two->add_option("--degree", common.degree, "degree d")->required();
  two->add_flag("--json", common.json, "emit JSON");
  two->callback([&] { action = [&] { return cmd_two_segment(c_value, common.degree, common.json, out); }; });

  auto* toric = app.add_subcommand("toric", "toric ideal by elimination");
  add_spec_options(toric, common);
  add_budget_options(toric, common);
  toric->add_option("--gens", common.gens_file, "generator JSON file");
  std::string order = "lex";
  toric->add_option("--order", order, "term order (lex)");
  toric->callback([&] { action = [&] { return cmd_toric(common, order, out); }; });

  auto* gb = app.add_subcommand("gb-check", "check that the minimal minors are a lex Groebner basis");
  add_spec_options(gb, common);
  add_budget_options(gb, common);
  gb->callback([&] { action = [&] { return cmd_gb_check(common, out); }; });

  std::string grading = "standard";
  auto* betti = app.add_subcommand("betti", "graded Betti numbers from gap numbers");
  add_spec_options(betti, common);
  betti->add_option("--gens", common.gens_file, "generator JSON file");
  betti->add_option("--grading", grading, "standard or weighted");
  betti->callback([&] { action = [&] { return cmd_betti(common, grading, out); }; });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series as a rational function");
  add_spec_options(hilbert, common);
  hilbert->add_option("--gens", common.gens_file, "generator JSON file");
  std::string hgrading = "weighted";
  std::size_t expand = 0;
  bool do_reduce = false;
  hilbert->add_option("--grading", hgrading, "standard or weighted");
  hilbert->add_option("--expand", expand, "print coefficients up to t^N");
  hilbert->add_flag("--reduce", do_reduce, "cancel denominator factors");
  hilbert->callback([&] { action = [&] { return cmd_hilbert(common, hgrading, expand, do_reduce, out); }; });

  std::size_t max_gens = DefectOptions{}.max_generators;
  auto* probe = app.add_subcommand("koszul-probe", "quadratic defect of gr_m S");
  add_spec_options(probe, common);
  add_budget_options(probe, common);
  probe->add_option("--gens", common.gens_file, "generator JSON file");
  probe->add_option("--max-gens", max_gens, "generator cap for the rank computations");
  probe->callback([&] { action = [&] { return cmd_koszul_probe(common, max_gens, out); }; });

  auto* family = app.add_subcommand("koszul-family", "instantiate a non-Koszul family");
  int family_id = 1;
  std::int64_t param = 1;
  std::vector<std::int64_t> extra;
  family->add_option("--family", family_id, "1 or 2")->required();
  family->add_option("--param", param, "k for family 1, f for family 2")->required();
  family->add_option("--extra", extra, "additional weights above the degree")->delimiter(',');
  family->add_option("--max-gens", max_gens, "generator cap for the rank computations");
  family->add_flag("--json", common.json, "emit JSON");
  family->callback([&] {
    action = [&] { return cmd_koszul_family(family_id, param, extra, common.json, max_gens, out); };
  });

  auto* cone = app.add_subcommand("normalize-cone", "unimodular normal form of a 2D cone");
  std::vector<std::int64_t> u, v;
  cone->add_option("--u", u, "first ray")->delimiter(',')->required();
  cone->add_option("--v", v, "second ray")->delimiter(',')->required();
  cone->add_flag("--json", common.json, "emit JSON");
  cone->callback([&] { action = [&] { return cmd_normalize_cone(u, v, common.json, out); }; });

  auto* corpus = app.add_subcommand("corpus-verify", "run the fixture corpus through every check");
  std::string corpus_path = VERONESE_DEFAULT_CORPUS;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  bool timings = false;
  corpus->add_option("path", corpus_path, "corpus JSON file");
  corpus->add_option("--random", random, "verify N seeded random specs instead");
  corpus->add_option("--seed", seed, "seed for --random");
  corpus->add_flag("--timings", timings, "report per-check timings");
  corpus->add_flag("--json", common.json, "emit JSON");
  add_budget_options(corpus, common);
  corpus->callback([&] {
    action = [&] { return cmd_corpus(corpus_path, random, seed, timings, common.json, common.budget(), out); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const VerificationFailure& f) {
    return f.code;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace veronese::cli
