#include "veronese/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& G) {
  for (const auto& g : G) {
    if (!g.is_zero() && divides(g.lead_monomial(), m)) return &g;
  }
  return nullptr;
}

void check_degree(const Polynomial& p, const GroebnerBudget& budget) {
  if (p.total_degree() > budget.max_degree) {
    throw BudgetError("polynomial degree " + std::to_string(p.total_degree()) +
                      " exceeds the budget of " + std::to_string(budget.max_degree));
  }
}

struct Pair {
  Exponent degree;
  std::size_t i;
  std::size_t j;
  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
  }
};

std::vector<Polynomial> reduced_form(std::vector<Polynomial> G, const TermOrder& order) {
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  // With leads sorted increasingly, a lead can only be divisible by an earlier one.
  std::vector<Polynomial> minimal;
  for (auto& g : G) {
    if (!find_reducer(g.lead_monomial(), minimal)) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    // Tail terms sit below the lead and reduction only produces smaller terms.
    const auto& terms = minimal[i].terms();
    const Polynomial tail =
        reduce(Polynomial::from_sorted_terms({terms.begin() + 1, terms.end()}), others, order);
    std::vector<Term> combined{terms.front()};
    combined.insert(combined.end(), tail.terms().begin(), tail.terms().end());
    const Polynomial reduced = Polynomial::from_sorted_terms(std::move(combined));
    out.push_back(make_monic(reduced));
  }
  return out;
}

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& G, const TermOrder& order) {
  std::vector<Term> remainder;
  Polynomial work = p;
  while (!work.is_zero()) {
    const Term lead = work.lead();
    if (const Polynomial* g = find_reducer(lead.exponents, G)) {
      const Polynomial step =
          multiply_term(*g, lead.coeff / g->lead().coeff, subtract(lead.exponents, g->lead_monomial()));
      work = subtract(work, step, order);
    } else {
      remainder.push_back(lead);
      std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
      work = Polynomial::from_sorted_terms(std::move(rest));
    }
  }
  // Terms were moved out in decreasing order.
  return Polynomial::from_sorted_terms(std::move(remainder));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const TermOrder& order, const GroebnerBudget& budget) {
  std::vector<Polynomial> G;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    check_degree(g, budget);
    G.push_back(make_monic(g));
  }
  if (G.empty()) return {};

  std::set<Pair> pending;
  auto pair_degree = [&](std::size_t i, std::size_t j) {
    return total_degree(lcm(G[i].lead_monomial(), G[j].lead_monomial()));
  };
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({pair_degree(i, j), i, j});
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count({pair_degree(a, b), a, b}) > 0;
  };

  std::size_t processed = 0;
  while (!pending.empty()) {
    const Pair pair = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& li = G[pair.i].lead_monomial();
    const Monomial& lj = G[pair.j].lead_monomial();
    const Monomial l = lcm(li, lj);
    if (l == add(li, lj)) continue;  // coprime leads
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = divides(G[k].lead_monomial(), l) && !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    if (++processed > budget.max_pairs) {
      throw BudgetError("Buchberger exceeded the budget of " + std::to_string(budget.max_pairs) +
                        " S-pairs");
    }
    Polynomial h = reduce(s_polynomial(G[pair.i], G[pair.j], order), G, order);
    if (h.is_zero()) continue;
    check_degree(h, budget);
    G.push_back(make_monic(h));
    if (G.size() > budget.max_basis_size) {
      throw BudgetError("Groebner basis grew past " + std::to_string(budget.max_basis_size) +
                        " elements");
    }
    const std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({pair_degree(k, n), k, n});
  }
  return reduced_form(std::move(G), order);
}

bool is_groebner_basis(const std::vector<Polynomial>& G, const TermOrder& order,
                       const GroebnerBudget& budget) {
  std::size_t processed = 0;
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].is_zero() || G[j].is_zero()) continue;
      const Monomial& li = G[i].lead_monomial();
      const Monomial& lj = G[j].lead_monomial();
      if (lcm(li, lj) == add(li, lj)) continue;
      if (++processed > budget.max_pairs) {
        throw BudgetError("Groebner check exceeded the budget of " +
                          std::to_string(budget.max_pairs) + " S-pairs");
      }
      if (!reduce(s_polynomial(G[i], G[j], order), G, order).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Monomial> initial_ideal(const std::vector<Polynomial>& G, const TermOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : G) {
    if (!g.is_zero()) leads.push_back(g.lead_monomial());
  }
  std::sort(leads.begin(), leads.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  std::vector<Monomial> out;
  for (auto& m : leads) {
    const bool redundant = std::any_of(out.begin(), out.end(),
                                       [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

BinomialIdeal::BinomialIdeal(std::vector<Polynomial> generators, std::size_t nvars, TermOrder order)
    : generators_(std::move(generators)), nvars_(nvars), order_(std::move(order)) {
  if (order_.nvars() != nvars_) throw InputError("term order and ring disagree on variable count");
  for (const auto& g : generators_) {
    for (const auto& t : g.terms()) {
      if (t.exponents.size() != nvars_) throw DimensionError("generator lives in a different ring");
    }
  }
}

BinomialIdeal BinomialIdeal::from_binomials(const std::vector<Binomial>& binomials,
                                            std::size_t nvars, const TermOrder& order) {
  std::vector<Polynomial> polys;
  polys.reserve(binomials.size());
  for (const auto& b : binomials) {
    if (b.plus.size() != nvars || b.minus.size() != nvars) {
      throw DimensionError("binomial lives in a different ring");
    }
    if (!b.is_zero()) polys.push_back(b.to_polynomial(order));
  }
  return BinomialIdeal(std::move(polys), nvars, order);
}

std::vector<Polynomial> BinomialIdeal::groebner_basis(const GroebnerBudget& budget) const {
  return buchberger(generators_, order_, budget);
}

std::vector<Binomial> BinomialIdeal::binomials() const {
  std::vector<Binomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) {
    if (g.size() != 2 || g.terms()[0].coeff != -g.terms()[1].coeff) {
      throw StateError("generator " + g.to_string() + " is not a pure difference binomial");
    }
    if (g.terms()[0].coeff > 0) {
      out.push_back({g.terms()[0].exponents, g.terms()[1].exponents});
    } else {
      out.push_back({g.terms()[1].exponents, g.terms()[0].exponents});
    }
  }
  return out;
}

bool ideal_equal(const BinomialIdeal& a, const BinomialIdeal& b, const GroebnerBudget& budget) {
  if (a.nvars() != b.nvars()) throw DimensionError("ideals live in different rings");
  const TermOrder& order = a.order();
  auto contained = [&](const BinomialIdeal& small, const std::vector<Polynomial>& gb) {
    return std::all_of(small.generators().begin(), small.generators().end(),
                       [&](const Polynomial& p) {
                         // Re-sort under the common order before reducing.
                         return reduce(Polynomial::from_terms(p.terms(), order), gb, order).is_zero();
                       });
  };
  const auto gb_a = buchberger(a.generators(), order, budget);
  std::vector<Polynomial> b_gens;
  for (const auto& p : b.generators()) b_gens.push_back(Polynomial::from_terms(p.terms(), order));
  const auto gb_b = buchberger(b_gens, order, budget);
  return contained(b, gb_a) && contained(a, gb_b);
}

}  // namespace veronese
