#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

/// The weighted Veronese ring V_{w,d}: monomials of k[x_1..x_n], deg x_i = w_i,
/// whose weighted degree is a multiple of d.
struct VeroneseSpec {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 1;

  /// Throws InputError unless n >= 1, every weight >= 1 and degree >= 1.
  void validate() const;
  std::size_t dimension() const { return weights.size(); }
  std::int64_t weighted_degree(const ExponentVector& e) const;
};

enum class Grading {
  Standard,  // deg x^e = sum of e
  Weighted,  // deg x^e = w . e
};

/// An ordered minimal generating set of a monomial subalgebra.
class SemigroupGens {
 public:
  SemigroupGens() = default;
  explicit SemigroupGens(std::vector<ExponentVector> gens,
                         std::optional<VeroneseSpec> veronese = std::nullopt);

  const std::vector<ExponentVector>& gens() const { return gens_; }
  const ExponentVector& operator[](std::size_t i) const { return gens_[i]; }
  std::size_t size() const { return gens_.size(); }
  std::size_t dimension() const { return gens_.empty() ? 0 : gens_.front().size(); }
  const std::optional<VeroneseSpec>& veronese() const { return veronese_; }

  /// Degrees d_i of the generators. Weighted grading needs Veronese metadata.
  std::vector<std::int64_t> degrees(Grading grading) const;

  /// Largest coordinate of any generator along each axis.
  ExponentVector max_exponents() const;

 private:
  std::vector<ExponentVector> gens_;
  std::optional<VeroneseSpec> veronese_;
};

/// Minimal generators of V_{(w1,w2),d} by the congruence scan over the second
/// exponent; output has first coordinates strictly decreasing.
SemigroupGens veronese_generators_2d(const VeroneseSpec& spec);

/// Sum of lcm(w_i, d) over i: no minimal generator has larger weighted degree.
std::int64_t generator_degree_bound(const VeroneseSpec& spec);

/// sum_i lcm(w_i, d) / d, the default number of degree multiples scanned.
std::int64_t default_multiple_bound(const VeroneseSpec& spec);

struct GeneratorEnumeration {
  SemigroupGens gens;
  std::int64_t multiple_bound = 0;  // K: degrees k*d for k = 1..K were scanned
  bool complete = false;            // K*d reaches a proven generator degree bound
};

/// Minimal generators of V_{w,d} with weighted degree at most K*d, sorted by
/// weighted degree and then lexicographically decreasing.
GeneratorEnumeration veronese_generators_nd(const VeroneseSpec& spec,
                                            std::optional<std::int64_t> multiple_bound = {});

/// All e >= 0 with w . e = target, lexicographically decreasing.
std::vector<ExponentVector> monomials_of_weighted_degree(const std::vector<std::int64_t>& weights,
                                                         std::int64_t target);

/// Membership and m-adic order queries against a fixed generating set. The
/// memo is shared between calls and guarded by a mutex.
class Semigroup {
 public:
  explicit Semigroup(SemigroupGens gens);

  const SemigroupGens& gens() const { return gens_; }

  bool contains(const ExponentVector& point) const;

  /// Largest k with point a sum of k generators. Throws DomainError for non-members.
  std::int64_t order(const ExponentVector& point) const;

  /// Exponents beta (one per generator) with sum_i beta_i g_i = point, using only
  /// generators with index >= first_allowed and with sum beta >= min_length.
  /// Larger generator indices are preferred.
  std::optional<std::vector<std::int64_t>> factorization(const ExponentVector& point,
                                                         std::size_t first_allowed = 0,
                                                         std::int64_t min_length = 1) const;

 private:
  struct Hash {
    std::size_t operator()(const ExponentVector& v) const noexcept;
  };

  std::int64_t order_locked(const ExponentVector& point) const;  // -1 for non-members
  std::int64_t longest_restricted_locked(const ExponentVector& point,
                                         std::size_t first_allowed) const;

  SemigroupGens gens_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<ExponentVector, std::int64_t, Hash> order_memo_;
  mutable std::unordered_map<std::size_t, std::unordered_map<ExponentVector, std::int64_t, Hash>>
      restricted_memo_;  // keyed by first_allowed; value is the longest factorization, -1 if none
};

bool membership(const SemigroupGens& gens, const ExponentVector& point);
std::int64_t m_adic_order(const SemigroupGens& gens, const ExponentVector& point);

struct DivisionClosure {
  bool closed = true;
  /// (mu1, mu2) with mu1 - mu2 >= 0 but not in the semigroup.
  std::optional<std::pair<ExponentVector, ExponentVector>> witness;
};

/// Searches members with coordinates <= search_bound for a quotient escaping
/// the semigroup. Veronese generating sets are closed by degree divisibility.
DivisionClosure is_closed_under_division(const SemigroupGens& gens, std::int64_t search_bound);

/// max(lcm(w1, d), lcm(w2, d)) for coprime 2D weights.
std::int64_t max_gen_degree(const VeroneseSpec& spec);

}  // namespace veronese
