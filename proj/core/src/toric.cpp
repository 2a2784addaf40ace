#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "veronese/errors.hpp"
#include "veronese/groebner.hpp"

namespace veronese {

namespace {

void fiber_rec(const SemigroupGens& gens, std::size_t index, ExponentVector& remaining,
               Monomial& beta, std::vector<Monomial>& out) {
  if (index == gens.size()) {
    if (std::all_of(remaining.begin(), remaining.end(), [](Exponent e) { return e == 0; })) {
      out.push_back(beta);
    }
    return;
  }
  // Largest multiplicity first so the output comes out lexicographically decreasing.
  const auto& g = gens[index];
  Exponent most = -1;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] > 0) {
      const Exponent q = remaining[k] / g[k];
      most = most < 0 ? q : std::min(most, q);
    }
  }
  for (Exponent m = most; m >= 0; --m) {
    for (std::size_t k = 0; k < g.size(); ++k) remaining[k] -= m * g[k];
    beta[index] = m;
    fiber_rec(gens, index + 1, remaining, beta, out);
    for (std::size_t k = 0; k < g.size(); ++k) remaining[k] += m * g[k];
  }
  beta[index] = 0;
}

bool share_variable(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return true;
  }
  return false;
}

}  // namespace

ExponentVector evaluate(const SemigroupGens& gens, const Monomial& beta) {
  if (beta.size() != gens.size()) throw DimensionError("exponent vector length differs from s");
  ExponentVector out(gens.dimension(), 0);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += beta[i] * gens[i][k];
  }
  return out;
}

bool vanishes(const Binomial& b, const SemigroupGens& gens) {
  return evaluate(gens, b.plus) == evaluate(gens, b.minus);
}

std::vector<Monomial> fiber(const SemigroupGens& gens, const ExponentVector& point) {
  if (point.size() != gens.dimension()) throw DimensionError("point dimension differs from generators");
  std::vector<Monomial> out;
  ExponentVector remaining = point;
  Monomial beta(gens.size(), 0);
  fiber_rec(gens, 0, remaining, beta, out);
  return out;
}

BinomialIdeal toric_ideal(const SemigroupGens& gens, const ToricOptions& options) {
  const std::size_t s = gens.size();
  const std::size_t n = gens.dimension();
  if (s > options.max_generators) {
    throw BudgetError("toric oracle is capped at " + std::to_string(options.max_generators) +
                      " generators, got " + std::to_string(s));
  }
  // Variables x_1..x_n come first and dominate t_1..t_s.
  const TermOrder elim = TermOrder::elimination(n, n + s);
  std::vector<Polynomial> system;
  for (std::size_t i = 0; i < s; ++i) {
    Monomial x(n + s, 0);
    std::copy(gens[i].begin(), gens[i].end(), x.begin());
    Monomial t(n + s, 0);
    t[n + i] = 1;
    system.push_back(Polynomial::binomial(t, x, elim));
  }
  const auto gb = buchberger(system, elim, options.budget);

  const TermOrder lex = TermOrder::lex(s);
  std::vector<Polynomial> kernel;
  for (const auto& g : gb) {
    const bool x_free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& term) {
      return std::all_of(term.exponents.begin(), term.exponents.begin() + n,
                         [](Exponent e) { return e == 0; });
    });
    if (!x_free) continue;
    std::vector<Term> projected;
    for (const auto& term : g.terms()) {
      projected.push_back({term.coeff, Monomial(term.exponents.begin() + n, term.exponents.end())});
    }
    kernel.push_back(Polynomial::from_terms(std::move(projected), lex));
  }
  std::sort(kernel.begin(), kernel.end(), [&](const Polynomial& a, const Polynomial& b) {
    return lex.compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  return BinomialIdeal(std::move(kernel), s, lex);
}

std::vector<Binomial> minimal_toric_generators(const SemigroupGens& gens,
                                               const BinomialIdeal& toric) {
  if (toric.nvars() != gens.size()) throw DimensionError("toric ideal and generators disagree on s");
  // Multidegrees of the basis elements, visited in a degree-compatible order.
  std::vector<ExponentVector> degrees;
  for (const auto& b : toric.binomials()) {
    if (!vanishes(b, gens)) throw InputError("binomial does not lie in the toric ideal");
    degrees.push_back(evaluate(gens, b.plus));
  }
  std::sort(degrees.begin(), degrees.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const Exponent da = std::accumulate(a.begin(), a.end(), Exponent{0});
    const Exponent db = std::accumulate(b.begin(), b.end(), Exponent{0});
    return da != db ? da < db : a < b;
  });
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  std::vector<Binomial> out;
  for (const auto& degree : degrees) {
    const auto monomials = fiber(gens, degree);
    std::vector<std::size_t> parent(monomials.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!share_variable(monomials[i], monomials[j])) continue;
        const std::size_t a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    // The first member of each component (lex-largest) represents it.
    std::vector<std::size_t> reps;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if (find(j) == j) reps.push_back(j);
    }
    for (std::size_t k = 1; k < reps.size(); ++k) {
      out.push_back({monomials[reps[0]], monomials[reps[k]]});
    }
  }
  return out;
}

}  // namespace veronese
