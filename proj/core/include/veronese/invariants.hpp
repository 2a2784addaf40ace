#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "veronese/lattice.hpp"
#include "veronese/semigroup.hpp"

namespace veronese {

/// Number of consecutive entries of a strictly increasing index set that
/// differ by more than one. Indices are 0-based and must be < s.
std::int64_t gap_number(std::span<const std::size_t> subset, std::size_t s);

/// Sparse graded Betti numbers beta_{i,j}.
class BettiTable {
 public:
  explicit BettiTable(Grading grading = Grading::Standard) : grading_(grading) {}

  Grading grading() const { return grading_; }
  const std::map<std::pair<std::int64_t, std::int64_t>, mpz_class>& entries() const {
    return entries_;
  }
  mpz_class at(std::int64_t i, std::int64_t j) const;
  void add(std::int64_t i, std::int64_t j, const mpz_class& mult);

  /// Sum over internal degrees of row i.
  mpz_class total(std::int64_t i) const;
  std::int64_t max_index() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Grading grading_;
  std::map<std::pair<std::int64_t, std::int64_t>, mpz_class> entries_;
};

/// beta_{|A|-1, sum_{k in A} d_k} = sum of gap(A), plus beta_{0,0} = 1, by a
/// dynamic program over positions. Supports s <= 64.
BettiTable graded_betti(std::span<const std::int64_t> degrees, Grading grading = Grading::Standard);

/// 1 for i = 0, otherwise i * C(s-1, i+1).
mpz_class total_betti(std::int64_t s, std::int64_t i);

struct HilbertSeries {
  std::vector<mpz_class> numerator;            // coefficient of t^k at index k
  std::vector<std::int64_t> denominator;       // product of (1 - t^d)

  std::string to_string() const;
};

/// Numerator 1 + sum_A (-1)^{|A|+1} gap(A) t^{sum d_k} over prod (1 - t^{d_j}),
/// left unreduced.
HilbertSeries hilbert_series(std::span<const std::int64_t> degrees);

/// sum_i (-1)^i beta_{i,j} t^j.
std::vector<mpz_class> euler_numerator(const BettiTable& table);

/// Coefficients of t^0..t^N.
std::vector<mpz_class> expand_series(const HilbertSeries& series, std::size_t N);

/// Cancels denominator factors (1 - t^d) that divide the numerator exactly.
HilbertSeries reduce(const HilbertSeries& series);

/// Betti numbers of the residue field: 1, s, then (s-2)^{i-2} (s-1)^2 with 0^0 = 1.
mpz_class residue_field_betti(std::int64_t s, std::int64_t i);

/// Number of minimal generators of I^k for a monomial ideal given by its
/// minimal generators. k is capped at 12.
std::int64_t fiber_power_generator_count(const std::vector<ExponentVector>& ideal, std::int64_t k);

/// Monomials of an ideal's generating set with the divisible ones removed,
/// sorted lexicographically decreasing.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> monomials);

}  // namespace veronese
