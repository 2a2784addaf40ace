#include "veronese_cli/json_io.hpp"

#include <string>

#include "veronese/errors.hpp"

namespace veronese::cli {

namespace {

const char* grading_name(Grading g) { return g == Grading::Standard ? "standard" : "weighted"; }

json sparse_monomial(const Monomial& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) out[std::to_string(i + 1)] = m[i];
  }
  return out;
}

Monomial dense_monomial(const json& j, std::size_t nvars) {
  Monomial m(nvars, 0);
  for (const auto& [key, value] : j.items()) {
    const std::size_t i = std::stoul(key);
    if (i < 1 || i > nvars) throw InputError("variable index " + key + " out of range");
    m[i - 1] = value.get<Exponent>();
  }
  return m;
}

}  // namespace

json points_to_json(const std::vector<ExponentVector>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(p);
  return out;
}

std::vector<ExponentVector> points_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of integer arrays");
  std::vector<ExponentVector> out;
  for (const auto& p : j) out.push_back(p.get<ExponentVector>());
  return out;
}

json to_json(const SemigroupGens& gens, std::optional<bool> complete) {
  json out;
  if (gens.veronese()) {
    out["weights"] = gens.veronese()->weights;
    out["degree"] = gens.veronese()->degree;
  }
  out["generators"] = points_to_json(gens.gens());
  if (complete) out["complete"] = *complete;
  out["degrees"] = gens.degrees(gens.veronese() ? Grading::Weighted : Grading::Standard);
  return out;
}

SemigroupGens gens_from_json(const json& j) {
  std::optional<VeroneseSpec> spec;
  if (j.contains("weights") && j.contains("degree")) {
    spec = VeroneseSpec{j.at("weights").get<std::vector<std::int64_t>>(), j.at("degree").get<std::int64_t>()};
  }
  return SemigroupGens(points_from_json(j.at("generators")), spec);
}

json to_json(const PresentationMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m.at(r, c);
      if (const auto* v = std::get_if<Variable>(&e)) {
        row.push_back({{"var", v->index + 1}});
      } else if (const auto* mono = std::get_if<MonomialEntry>(&e)) {
        row.push_back({{"mono", sparse_monomial(mono->exponents)}});
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"nvars", m.nvars()}, {"entries", std::move(rows)}};
}

PresentationMatrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto nvars = j.at("nvars").get<std::size_t>();
  PresentationMatrix m(rows, cols, nvars);
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw InputError("matrix JSON has the wrong number of rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw InputError("matrix JSON has a ragged row");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = entries[r][c];
      if (e.is_null()) continue;
      if (e.contains("var")) {
        const auto i = e.at("var").get<std::size_t>();
        if (i < 1) throw InputError("variable indices are 1-based");
        m.set(r, c, Variable{i - 1});
      } else {
        m.set(r, c, MonomialEntry{dense_monomial(e.at("mono"), nvars)});
      }
    }
  }
  return m;
}

json to_json(const Binomial& b) {
  return {{"plus", sparse_monomial(b.plus)}, {"minus", sparse_monomial(b.minus)}};
}

Binomial binomial_from_json(const json& j, std::size_t nvars) {
  return {dense_monomial(j.at("plus"), nvars), dense_monomial(j.at("minus"), nvars)};
}

json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [key, mult] : t.entries()) {
    entries.push_back({{"i", key.first}, {"j", key.second}, {"mult", mult.get_str()}});
  }
  return {{"grading", grading_name(t.grading())}, {"entries", std::move(entries)}};
}

BettiTable betti_from_json(const json& j) {
  const auto g = j.at("grading").get<std::string>();
  if (g != "standard" && g != "weighted") throw InputError("unknown grading " + g);
  BettiTable t(g == "standard" ? Grading::Standard : Grading::Weighted);
  for (const auto& e : j.at("entries")) {
    t.add(e.at("i").get<std::int64_t>(), e.at("j").get<std::int64_t>(),
          mpz_class(e.at("mult").get<std::string>()));
  }
  return t;
}

json big_list(const std::vector<mpz_class>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

json to_json(const HilbertSeries& hs) {
  return {{"numerator", big_list(hs.numerator)}, {"denominator", hs.denominator}};
}

HilbertSeries series_from_json(const json& j) {
  HilbertSeries hs;
  for (const auto& c : j.at("numerator")) hs.numerator.emplace_back(c.get<std::string>());
  hs.denominator = j.at("denominator").get<std::vector<std::int64_t>>();
  return hs;
}

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"coeff", t.coeff.get_str()}, {"monomial", sparse_monomial(t.exponents)}});
  }
  return {{"text", p.to_string()}, {"terms", std::move(terms)}};
}

json to_json(const DefectReport& r) {
  json out = {{"quadratic_monomials", r.quadratic_monomials},
              {"cubic_monomials", r.cubic_monomials},
              {"quadratic_relations", r.quadratic_relations},
              {"cubic_kernel", r.cubic_kernel},
              {"cubic_closure", r.cubic_closure},
              {"defect", r.defect}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return out;
}

}  // namespace veronese::cli
