#include "veronese/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

int compare_block(const TermOrder::Block& block, const Monomial& a, const Monomial& b) {
  if (block.kind != TermOrder::Kind::Lex) {
    Exponent da = 0, db = 0;
    for (auto v : block.variables) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
  }
  if (block.kind == TermOrder::Kind::GradedRevLex) {
    for (auto it = block.variables.rbegin(); it != block.variables.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
  }
  for (auto v : block.variables) {
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

std::vector<std::size_t> iota_vars(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

const char* kind_name(TermOrder::Kind kind) {
  switch (kind) {
    case TermOrder::Kind::Lex: return "lex";
    case TermOrder::Kind::GradedLex: return "grlex";
    case TermOrder::Kind::GradedRevLex: return "grevlex";
  }
  return "?";
}

}  // namespace

TermOrder::TermOrder(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::vector<bool> seen;
  for (const auto& b : blocks_) {
    for (auto v : b.variables) {
      if (v >= seen.size()) seen.resize(v + 1, false);
      if (seen[v]) throw InputError("variable listed twice in a term order");
      seen[v] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
    throw InputError("term order does not cover every variable");
  }
  nvars_ = seen.size();
}

TermOrder TermOrder::lex(std::size_t nvars) { return TermOrder({{Kind::Lex, iota_vars(0, nvars)}}); }

TermOrder TermOrder::graded_lex(std::size_t nvars) {
  return TermOrder({{Kind::GradedLex, iota_vars(0, nvars)}});
}

TermOrder TermOrder::graded_revlex(std::size_t nvars) {
  return TermOrder({{Kind::GradedRevLex, iota_vars(0, nvars)}});
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
  return TermOrder({{Kind::Lex, std::move(priority)}});
}

TermOrder TermOrder::elimination(std::size_t block, std::size_t nvars, Kind first, Kind second) {
  if (block > nvars) throw InputError("elimination block larger than the variable count");
  std::vector<Block> blocks;
  if (block > 0) blocks.push_back({first, iota_vars(0, block)});
  if (block < nvars) blocks.push_back({second, iota_vars(block, nvars)});
  return TermOrder(std::move(blocks));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& block : blocks_) {
    if (int c = compare_block(block, a, b); c != 0) return c;
  }
  return 0;
}

std::string TermOrder::name() const {
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += "|";
    out += kind_name(b.kind);
  }
  return out;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const TermOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.exponents, b.exponents);
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, Rational coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({std::move(coeff), m});
  return p;
}

Polynomial Polynomial::binomial(const Monomial& plus, const Monomial& minus,
                                const TermOrder& order) {
  return from_terms({{Rational(1), plus}, {Rational(-1), minus}}, order);
}

Exponent Polynomial::total_degree() const {
  Exponent best = 0;
  for (const auto& t : terms_) best = std::max(best, veronese::total_degree(t.exponents));
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        a.terms_[i].exponents != b.terms_[i].exponents) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string(const std::string& var, std::size_t first_index) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational magnitude = abs(t.coeff);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool constant = veronese::total_degree(t.exponents) == 0;
    if (magnitude != 1 || constant) {
      out << magnitude.get_str();
      if (!constant) out << "*";
    }
    if (!constant) out << monomial_to_string(t.exponents, var, first_index);
    first = false;
  }
  return out.str();
}

namespace {

Polynomial combine(const Polynomial& a, const Polynomial& b, const TermOrder& order, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size()) {
      c = -1;
    } else if (j == tb.size()) {
      c = 1;
    } else {
      c = order.compare(ta[i].exponents, tb[j].exponents);
    }
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      Term t = tb[j++];
      if (negate_b) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      Rational sum = negate_b ? Rational(ta[i].coeff - tb[j].coeff)
                              : Rational(ta[i].coeff + tb[j].coeff);
      if (sum != 0) out.push_back({std::move(sum), ta[i].exponents});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted_terms(std::move(out));
}

}  // namespace

Polynomial add(const Polynomial& a, const Polynomial& b, const TermOrder& order) {
  return combine(a, b, order, false);
}

Polynomial subtract(const Polynomial& a, const Polynomial& b, const TermOrder& order) {
  return combine(a, b, order, true);
}

Polynomial multiply_term(const Polynomial& p, const Rational& coeff, const Monomial& shift) {
  if (coeff == 0) return {};
  // A monomial order is preserved by multiplication with a monomial.
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.coeff * coeff, add(t.exponents, shift)});
  return Polynomial::from_sorted_terms(std::move(terms));
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return multiply_term(p, Rational(1) / p.lead().coeff, Monomial(p.lead_monomial().size(), 0));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool divides(const Monomial& a, const Monomial& b) { return dominates(b, a); }

Exponent total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), Exponent{0});
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  const Polynomial a = multiply_term(f, Rational(1) / f.lead().coeff, subtract(l, f.lead_monomial()));
  const Polynomial b = multiply_term(g, Rational(1) / g.lead().coeff, subtract(l, g.lead_monomial()));
  return subtract(a, b, order);
}

std::string monomial_to_string(const Monomial& m, const std::string& var, std::size_t first_index) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    out << var << (i + first_index);
    if (m[i] > 1) out << "^" << m[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

bool Binomial::same_up_to_sign(const Binomial& other) const {
  return (plus == other.plus && minus == other.minus) ||
         (plus == other.minus && minus == other.plus);
}

}  // namespace veronese
