#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

using Rational = mpq_class;
using BigInt = mpz_class;
using Monomial = ExponentVector;

/// A monomial order assembled from blocks of variables. Blocks compare in
/// sequence; inside a block variables are listed by decreasing priority.
class TermOrder {
 public:
  enum class Kind { Lex, GradedLex, GradedRevLex };

  struct Block {
    Kind kind = Kind::Lex;
    std::vector<std::size_t> variables;
  };

  TermOrder() = default;
  explicit TermOrder(std::vector<Block> blocks);

  static TermOrder lex(std::size_t nvars);
  static TermOrder graded_lex(std::size_t nvars);
  static TermOrder graded_revlex(std::size_t nvars);
  /// Lex with the given variable priority, priority[0] largest.
  static TermOrder lex(std::vector<std::size_t> priority);
  /// Variables [0, block) form a block that dominates [block, nvars).
  static TermOrder elimination(std::size_t block, std::size_t nvars, Kind first = Kind::Lex,
                               Kind second = Kind::Lex);

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::string name() const;

 private:
  std::vector<Block> blocks_;
  std::size_t nvars_ = 0;
};

struct Term {
  Rational coeff;
  Monomial exponents;
};

/// Sparse polynomial over Q with terms sorted strictly decreasing for the
/// order it was built with. Operations take that order explicitly.
class Polynomial {
 public:
  Polynomial() = default;

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms, const TermOrder& order);
  /// Trusts the caller: terms strictly decreasing, no zero coefficients.
  static Polynomial from_sorted_terms(std::vector<Term> terms);
  static Polynomial monomial(const Monomial& m, Rational coeff = 1);
  /// plus - minus.
  static Polynomial binomial(const Monomial& plus, const Monomial& minus, const TermOrder& order);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().exponents; }
  Exponent total_degree() const;

  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var = "t", std::size_t first_index = 1) const;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, const TermOrder& order);
Polynomial subtract(const Polynomial& a, const Polynomial& b, const TermOrder& order);
/// coeff * x^shift * p.
Polynomial multiply_term(const Polynomial& p, const Rational& coeff, const Monomial& shift);
Polynomial make_monic(const Polynomial& p);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Exponent total_degree(const Monomial& m);
std::string monomial_to_string(const Monomial& m, const std::string& var = "t",
                               std::size_t first_index = 1);

/// Difference of two monomials; the toric ideals and minors of this library.
struct Binomial {
  Monomial plus;
  Monomial minus;

  Polynomial to_polynomial(const TermOrder& order) const {
    return Polynomial::binomial(plus, minus, order);
  }
  bool is_zero() const { return plus == minus; }
  /// Equal up to sign.
  bool same_up_to_sign(const Binomial& other) const;
};

}  // namespace veronese
