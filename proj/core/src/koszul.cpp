#include "veronese/koszul.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "veronese/errors.hpp"
#include "veronese/linear_algebra.hpp"
#include "veronese/presentation.hpp"

namespace veronese {

std::vector<ExponentVector> weighted_monomials_of_degree(const std::vector<std::int64_t>& weights,
                                                         std::int64_t D) {
  return monomials_of_weighted_degree(weights, D);
}

std::vector<std::int64_t> gr_hilbert(const SemigroupGens& gens, std::int64_t K,
                                     std::size_t max_points) {
  if (K < 0) throw InputError("K must be nonnegative");
  const Semigroup semigroup(gens);
  std::vector<std::int64_t> dims;
  std::set<ExponentVector> sums{ExponentVector(gens.dimension(), 0)};  // sums of exactly k gens
  std::size_t explored = 0;
  for (std::int64_t k = 0; k <= K; ++k) {
    if (k > 0) {
      std::set<ExponentVector> next;
      for (const auto& p : sums) {
        for (const auto& g : gens.gens()) next.insert(add(p, g));
      }
      sums = std::move(next);
    }
    explored += sums.size();
    if (explored > max_points) {
      throw BudgetError("gr_hilbert explored more than " + std::to_string(max_points) + " points");
    }
    std::int64_t layer = 0;
    for (const auto& p : sums) {
      if (semigroup.order(p) == k) ++layer;
    }
    dims.push_back(layer);
  }
  return dims;
}

namespace {

struct Piece {
  std::vector<Monomial> monomials;  // t-monomials of one multidegree, lex-decreasing
  std::int64_t order = 0;           // m-adic order of the multidegree
};

/// t-monomials of total degree `degree`, grouped by the semigroup element they map to.
std::map<ExponentVector, Piece> pieces_of_degree(const SemigroupGens& gens, const Semigroup& sg,
                                                 std::int64_t degree) {
  const std::size_t s = gens.size();
  std::map<ExponentVector, Piece> out;
  std::vector<std::size_t> idx(degree, 0);
  // Nondecreasing index tuples enumerate monomials t_{i1} ... t_{ik}.
  while (true) {
    Monomial mono(s, 0);
    for (auto i : idx) ++mono[i];
    const ExponentVector point = evaluate(gens, mono);
    auto& piece = out[point];
    piece.monomials.push_back(mono);
    std::int64_t k = degree - 1;
    while (k >= 0 && idx[k] == s - 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (std::int64_t j = k + 1; j < degree; ++j) idx[j] = idx[k];
  }
  for (auto& [point, piece] : out) {
    piece.order = sg.order(point);
    std::sort(piece.monomials.begin(), piece.monomials.end(), std::greater<>());
  }
  return out;
}

std::size_t kernel_dim(const Piece& piece, std::int64_t degree) {
  // Monomials of higher order vanish in gr; otherwise they all hit one basis vector.
  return piece.order == degree ? piece.monomials.size() - 1 : piece.monomials.size();
}

std::vector<mpz_class> coordinates(const std::vector<Monomial>& basis,
                                   const std::vector<std::pair<Monomial, int>>& terms) {
  std::vector<mpz_class> v(basis.size(), 0);
  for (const auto& [m, c] : terms) {
    const auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw InternalError("relation leaves its multidegree");
    v[it - basis.begin()] += c;
  }
  return v;
}

}  // namespace

DefectReport quadratic_defect(const SemigroupGens& gens, const DefectOptions& options) {
  const std::size_t s = gens.size();
  if (s > options.max_generators) {
    throw BudgetError("quadratic_defect is capped at " + std::to_string(options.max_generators) +
                      " generators, got " + std::to_string(s));
  }
  const Semigroup sg(gens);
  DefectReport report;

  // Spanning set of R_2: fiber differences in order-2 degrees, and monomials
  // whose image has order above 2.
  std::vector<std::vector<std::pair<Monomial, int>>> r2;
  for (const auto& [point, piece] : pieces_of_degree(gens, sg, 2)) {
    report.quadratic_monomials += piece.monomials.size();
    report.quadratic_relations += kernel_dim(piece, 2);
    if (piece.order == 2) {
      for (std::size_t k = 1; k < piece.monomials.size(); ++k) {
        r2.push_back({{piece.monomials[0], 1}, {piece.monomials[k], -1}});
      }
    } else {
      for (const auto& m : piece.monomials) r2.push_back({{m, 1}});
    }
  }

  const auto cubic = pieces_of_degree(gens, sg, 3);
  std::map<ExponentVector, IntegerMatrix> closure;
  for (std::size_t l = 0; l < s; ++l) {
    for (const auto& rel : r2) {
      std::vector<std::pair<Monomial, int>> shifted;
      for (const auto& [m, c] : rel) {
        Monomial e = m;
        ++e[l];
        shifted.push_back({std::move(e), c});
      }
      const ExponentVector point = evaluate(gens, shifted.front().first);
      closure[point].push_back(coordinates(cubic.at(point).monomials, shifted));
    }
  }

  const TermOrder lex = TermOrder::lex(s);
  for (const auto& [point, piece] : cubic) {
    report.cubic_monomials += piece.monomials.size();
    const std::size_t kernel = kernel_dim(piece, 3);
    const auto it = closure.find(point);
    const std::size_t rank = it == closure.end() ? 0 : bareiss_rank(it->second);
    if (rank > kernel) throw InternalError("quadratic closure exceeds the cubic kernel");
    report.cubic_kernel += kernel;
    report.cubic_closure += rank;
    if (rank == kernel || report.witness) continue;

    // Kernel elements tried in order: differences u_0 - u_k, then single monomials.
    const IntegerMatrix base = it == closure.end() ? IntegerMatrix{} : it->second;
    auto outside = [&](const std::vector<std::pair<Monomial, int>>& candidate) {
      IntegerMatrix m = base;
      m.push_back(coordinates(piece.monomials, candidate));
      return bareiss_rank(std::move(m)) > rank;
    };
    for (std::size_t k = 1; k < piece.monomials.size() && !report.witness; ++k) {
      const std::vector<std::pair<Monomial, int>> cand{{piece.monomials[0], 1},
                                                       {piece.monomials[k], -1}};
      if (outside(cand)) report.witness = Polynomial::binomial(piece.monomials[0], piece.monomials[k], lex);
    }
    if (piece.order > 3) {
      for (std::size_t k = 0; k < piece.monomials.size() && !report.witness; ++k) {
        if (outside({{piece.monomials[k], 1}})) report.witness = Polynomial::monomial(piece.monomials[k]);
      }
    }
    if (!report.witness) throw InternalError("no witness found for a positive defect");
  }
  report.defect = report.cubic_kernel - report.cubic_closure;
  return report;
}

FamilyInstance nonkoszul_family_instance(int family, std::int64_t parameter,
                                         const std::vector<std::int64_t>& extra_weights) {
  FamilyInstance inst;
  inst.family = family;
  inst.parameter = parameter;
  if (family == 1) {
    if (parameter < 1) throw InputError("family 1 needs k >= 1");
    const std::int64_t k = parameter;
    inst.probe_weights = {3, 3 * k + 1, 3 * k + 2};
    inst.spec.degree = 3 * (3 * k + 2);
  } else if (family == 2) {
    if (parameter < 2) throw InputError("family 2 needs f >= 2");
    const std::int64_t f = parameter;
    inst.probe_weights = {f + 1, f + 2, f * f + f - 1};
    inst.spec.degree = 3 * (f * f + f - 1);
    inst.note = "degree taken as 3(f^2+f-1), the value that gives V_{(3,4,5),15} at f=2";
  } else {
    throw InputError("family must be 1 or 2");
  }
  for (auto w : extra_weights) {
    if (w <= inst.spec.degree) throw InputError("extra weights must exceed the degree");
  }
  inst.spec.weights = inst.probe_weights;
  inst.spec.weights.insert(inst.spec.weights.end(), extra_weights.begin(), extra_weights.end());
  return inst;
}

std::vector<ExponentVector> family2_degree_piece(std::int64_t f) {
  if (f < 2) throw InputError("family 2 needs f >= 2");
  return {{f, f - 1, 1}, {2 * f + 1, f - 2, 0}, {f - 1, 2 * f - 1, 0}, {0, 0, 3}};
}

KoszulCertification certify_koszul_quadratic_gb(const SemigroupGens& gens,
                                                 const GroebnerBudget& budget) {
  KoszulCertification cert;
  if (gens.dimension() != 2) {
    cert.reason = "generators are not two-dimensional, so they do not form a convex sequence";
    return cert;
  }
  // A generating set has no intrinsic order; test the first-coordinate order.
  auto points = gens.gens();
  std::sort(points.begin(), points.end(), std::greater<>());
  std::optional<ConvexSequence> seq;
  try {
    seq.emplace(points);
  } catch (const InputError& e) {
    cert.reason = std::string("not a convex sequence: ") + e.what();
    return cert;
  }
  const SemigroupGens ordered(seq->points(), gens.veronese());
  if (!ordered.veronese()) {
    const auto maxe = ordered.max_exponents();
    const auto closure = is_closed_under_division(ordered, 2 * std::max(maxe[0], maxe[1]));
    if (!closure.closed) {
      cert.reason = "semigroup is not closed under monomial division";
      return cert;
    }
  }
  if (ordered.size() < 3) {
    cert.status = KoszulStatus::Certified;
    cert.reason = "polynomial ring";
    return cert;
  }
  const auto filled = fill_skeleton(build_skeleton(*seq), ordered);
  const auto minors = minimal_minors(filled);
  const TermOrder lex = TermOrder::lex(ordered.size());
  std::vector<Polynomial> polys;
  for (const auto& b : minors) {
    if (!vanishes(b, ordered)) throw InternalError("minimal minor does not vanish");
    polys.push_back(b.to_polynomial(lex));
  }
  if (!is_groebner_basis(polys, lex, budget)) {
    cert.status = KoszulStatus::NotCertified;
    cert.reason = "minimal minors are not a lex Groebner basis";
    return cert;
  }
  const auto in = initial_ideal(polys, lex);
  if (!std::all_of(in.begin(), in.end(), [](const Monomial& m) { return total_degree(m) == 2; })) {
    cert.status = KoszulStatus::NotCertified;
    cert.reason = "initial ideal is not quadratic";
    return cert;
  }
  cert.status = KoszulStatus::Certified;
  cert.reason = "minimal minors form a lex Groebner basis with quadratic initial ideal";
  return cert;
}

const char* to_string(KoszulStatus status) {
  switch (status) {
    case KoszulStatus::Certified: return "certified";
    case KoszulStatus::NotCertified: return "not-certified";
    case KoszulStatus::Refused: return "refused";
  }
  return "?";
}

}  // namespace veronese
