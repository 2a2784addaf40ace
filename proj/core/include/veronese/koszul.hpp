#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veronese/groebner.hpp"
#include "veronese/polynomial.hpp"
#include "veronese/semigroup.hpp"

namespace veronese {

/// All e >= 0 with w . e = D, lexicographically decreasing.
std::vector<ExponentVector> weighted_monomials_of_degree(const std::vector<std::int64_t>& weights,
                                                         std::int64_t D);

/// dim m^k / m^{k+1} for k = 0..K: the number of semigroup elements whose
/// m-adic order is exactly k. Throws BudgetError once more than max_points
/// sums have to be explored.
std::vector<std::int64_t> gr_hilbert(const SemigroupGens& gens, std::int64_t K,
                                     std::size_t max_points = 2'000'000);

struct DefectReport {
  std::size_t quadratic_monomials = 0;
  std::size_t cubic_monomials = 0;
  std::size_t quadratic_relations = 0;  // dim R_2
  std::size_t cubic_kernel = 0;         // dim ker mu_3
  std::size_t cubic_closure = 0;        // dim of t_l * R_2 inside degree 3
  std::size_t defect = 0;               // cubic_kernel - cubic_closure
  /// A relation of gr outside the quadratic closure, present iff defect > 0.
  /// Two-term when possible.
  std::optional<Polynomial> witness;
};

struct DefectOptions {
  std::size_t max_generators = 12;
};

/// Compares degree-3 relations of gr_m S with those generated by degree-2
/// relations. A positive defect is a minimal cubic relation, so gr_m S is not
/// Koszul.
DefectReport quadratic_defect(const SemigroupGens& gens, const DefectOptions& options = {});

struct FamilyInstance {
  int family = 1;
  std::int64_t parameter = 0;
  VeroneseSpec spec;
  /// Weights of the three-variable subring that carries the cubic relation.
  std::vector<std::int64_t> probe_weights;
  std::string note;
};

/// Family 1: weights (3, 3k+1, 3k+2, extra...) and degree 3(3k+2), k >= 1.
/// Family 2: weights (f+1, f+2, f^2+f-1, extra...) and degree 3(f^2+f-1), f >= 2.
/// Extra weights must exceed the degree.
FamilyInstance nonkoszul_family_instance(int family, std::int64_t parameter,
                                         const std::vector<std::int64_t>& extra_weights = {});

/// The four monomials of degree 3(f^2+f-1) in weights (f+1, f+2, f^2+f-1):
/// x1^f x2^{f-1} x3, x1^{2f+1} x2^{f-2}, x1^{f-1} x2^{2f-1}, x3^3.
std::vector<ExponentVector> family2_degree_piece(std::int64_t f);

enum class KoszulStatus { Certified, NotCertified, Refused };

struct KoszulCertification {
  KoszulStatus status = KoszulStatus::Refused;
  std::string reason;
};

/// Certified when the minimal minors of the filled skeleton form a lex
/// Groebner basis with quadratic initial ideal. Refuses inputs that are not a
/// two-dimensional convex sequence closed under monomial division. Never
/// concludes that a ring is not Koszul.
KoszulCertification certify_koszul_quadratic_gb(const SemigroupGens& gens,
                                                 const GroebnerBudget& budget = {});

const char* to_string(KoszulStatus status);

}  // namespace veronese
