#pragma once

#include <cstddef>
#include <vector>

#include "veronese/polynomial.hpp"
#include "veronese/semigroup.hpp"

namespace veronese {

/// Resource caps for Buchberger runs; exceeding one raises BudgetError.
struct GroebnerBudget {
  std::size_t max_pairs = 20000;    // S-pairs actually reduced
  Exponent max_degree = 400;        // total degree of any intermediate polynomial
  std::size_t max_basis_size = 20000;
};

/// Normal form of p: repeatedly rewrites the largest reducible term using the
/// first element of G (in list order) whose lead monomial divides it.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& G, const TermOrder& order);

/// Reduced Groebner basis, monic, sorted by increasing lead monomial.
/// Pairs are selected by smallest lcm degree, ties by index pair; the product
/// and chain criteria prune pairs.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const TermOrder& order, const GroebnerBudget& budget = {});

/// True iff every S-pair of G reduces to zero modulo G.
bool is_groebner_basis(const std::vector<Polynomial>& G, const TermOrder& order,
                       const GroebnerBudget& budget = {});

/// Minimal generators of the lead-term ideal of G, sorted increasingly.
std::vector<Monomial> initial_ideal(const std::vector<Polynomial>& G, const TermOrder& order);

class BinomialIdeal {
 public:
  BinomialIdeal(std::vector<Polynomial> generators, std::size_t nvars, TermOrder order);
  static BinomialIdeal from_binomials(const std::vector<Binomial>& binomials, std::size_t nvars,
                                      const TermOrder& order);

  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t nvars() const { return nvars_; }
  const TermOrder& order() const { return order_; }

  std::vector<Polynomial> groebner_basis(const GroebnerBudget& budget = {}) const;

  /// Each generator as plus - minus. Throws StateError on non-binomial generators.
  std::vector<Binomial> binomials() const;

 private:
  std::vector<Polynomial> generators_;
  std::size_t nvars_;
  TermOrder order_;
};

/// Equal ideals, checked by reducing each side's generators modulo the other's
/// Groebner basis (computed in A's order).
bool ideal_equal(const BinomialIdeal& a, const BinomialIdeal& b, const GroebnerBudget& budget = {});

struct ToricOptions {
  std::size_t max_generators = 10;
  GroebnerBudget budget;
};

/// Kernel of t_i -> x^{g_i}, as the reduced lex basis (t_1 > ... > t_s) obtained
/// by eliminating x from (t_i - x^{g_i}). Throws BudgetError past max_generators.
BinomialIdeal toric_ideal(const SemigroupGens& gens, const ToricOptions& options = {});

/// A minimal binomial generating set of the toric ideal. Degrees are taken
/// from a Groebner basis; in each degree the fiber is split into components
/// joined by shared variables, and one binomial links the first component to
/// each other one.
std::vector<Binomial> minimal_toric_generators(const SemigroupGens& gens,
                                               const BinomialIdeal& toric);

/// All beta >= 0 with sum_i beta_i g_i = point, lexicographically decreasing.
std::vector<Monomial> fiber(const SemigroupGens& gens, const ExponentVector& point);

/// sum_i beta_i g_i.
ExponentVector evaluate(const SemigroupGens& gens, const Monomial& beta);

/// Both sides evaluate to the same semigroup element.
bool vanishes(const Binomial& b, const SemigroupGens& gens);

}  // namespace veronese
