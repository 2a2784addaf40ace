#include "veronese/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "veronese/errors.hpp"

namespace veronese {

std::int64_t gap_number(std::span<const std::size_t> subset, std::size_t s) {
  std::int64_t gaps = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= s) throw InputError("subset index out of range");
    if (k == 0) continue;
    if (subset[k] <= subset[k - 1]) throw OrderingError("subset must be strictly increasing");
    if (subset[k] - subset[k - 1] > 1) ++gaps;
  }
  return gaps;
}

mpz_class BettiTable::at(std::int64_t i, std::int64_t j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? mpz_class(0) : it->second;
}

void BettiTable::add(std::int64_t i, std::int64_t j, const mpz_class& mult) {
  if (mult == 0) return;
  auto& slot = entries_[{i, j}];
  slot += mult;
  if (slot < 0) throw InternalError("negative Betti number");
}

mpz_class BettiTable::total(std::int64_t i) const {
  mpz_class sum = 0;
  for (auto it = entries_.lower_bound({i, INT64_MIN}); it != entries_.end() && it->first.first == i;
       ++it) {
    sum += it->second;
  }
  return sum;
}

std::int64_t BettiTable::max_index() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first.first;
}

namespace {

enum Status : int { Empty = 0, Last = 1, Gap = 2 };

struct Tally {
  mpz_class subsets;  // number of subsets in this state
  mpz_class gaps;     // sum of their gap numbers
};

using StateKey = std::tuple<std::int64_t, std::int64_t, int>;  // size, degree sum, status

std::map<StateKey, Tally> subset_dp(std::span<const std::int64_t> degrees) {
  if (degrees.size() > 64) throw InputError("subset dynamic program is capped at s = 64");
  for (auto d : degrees) {
    if (d < 0) throw InputError("degrees must be nonnegative");
  }
  std::map<StateKey, Tally> states{{{0, 0, Empty}, {1, 0}}};
  for (auto d : degrees) {
    std::map<StateKey, Tally> next;
    for (const auto& [key, tally] : states) {
      const auto [size, sum, status] = key;
      // Skip this position.
      auto& skip = next[{size, sum, status == Empty ? Empty : Gap}];
      skip.subsets += tally.subsets;
      skip.gaps += tally.gaps;
      // Take it; coming back after a skipped position opens a new gap.
      auto& take = next[{size + 1, sum + d, Last}];
      take.subsets += tally.subsets;
      take.gaps += tally.gaps;
      if (status == Gap) take.gaps += tally.subsets;
    }
    states = std::move(next);
  }
  return states;
}

void trim(std::vector<mpz_class>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

BettiTable graded_betti(std::span<const std::int64_t> degrees, Grading grading) {
  BettiTable table(grading);
  table.add(0, 0, 1);
  for (const auto& [key, tally] : subset_dp(degrees)) {
    const auto [size, sum, status] = key;
    if (status != Empty) table.add(size - 1, sum, tally.gaps);
  }
  return table;
}

mpz_class total_betti(std::int64_t s, std::int64_t i) {
  if (s < 1 || i < 0) throw InputError("total_betti needs s >= 1 and i >= 0");
  if (i == 0) return 1;
  if (i + 1 > s - 1) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(s - 1), static_cast<unsigned long>(i + 1));
  return c * i;
}

std::vector<mpz_class> euler_numerator(const BettiTable& table) {
  std::vector<mpz_class> p;
  for (const auto& [key, mult] : table.entries()) {
    const auto [i, j] = key;
    if (j < 0) throw InputError("negative internal degree");
    if (static_cast<std::size_t>(j) >= p.size()) p.resize(j + 1);
    if (i % 2 == 0) {
      p[j] += mult;
    } else {
      p[j] -= mult;
    }
  }
  trim(p);
  return p;
}

HilbertSeries hilbert_series(std::span<const std::int64_t> degrees) {
  for (auto d : degrees) {
    if (d < 1) throw InputError("Hilbert series needs positive degrees");
  }
  HilbertSeries hs;
  hs.numerator = euler_numerator(graded_betti(degrees));
  hs.denominator.assign(degrees.begin(), degrees.end());
  return hs;
}

std::vector<mpz_class> expand_series(const HilbertSeries& series, std::size_t N) {
  std::vector<mpz_class> c(N + 1);
  for (std::size_t k = 0; k < series.numerator.size() && k <= N; ++k) c[k] = series.numerator[k];
  for (auto d : series.denominator) {
    if (d < 1) throw InputError("denominator degrees must be positive");
    for (std::size_t k = static_cast<std::size_t>(d); k <= N; ++k) c[k] += c[k - d];
  }
  return c;
}

HilbertSeries reduce(const HilbertSeries& series) {
  HilbertSeries out;
  out.numerator = series.numerator;
  trim(out.numerator);
  for (auto d : series.denominator) {
    const auto step = static_cast<std::size_t>(d);
    std::vector<mpz_class>& num = out.numerator;
    bool divides = !num.empty() && num.size() > step;
    std::vector<mpz_class> q;
    if (divides) {
      // num = (1 - t^d) q, solved from the bottom and checked at the top.
      q.assign(num.size() - step, 0);
      for (std::size_t k = 0; k < q.size(); ++k) q[k] = num[k] + (k >= step ? q[k - step] : 0);
      for (std::size_t k = q.size(); k < num.size() && divides; ++k) {
        const mpz_class below = k >= step && k - step < q.size() ? q[k - step] : mpz_class(0);
        divides = num[k] == -below;
      }
    }
    if (divides) {
      num = std::move(q);
      trim(num);
    } else {
      out.denominator.push_back(d);
    }
  }
  return out;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  std::size_t nonzero = 0;
  for (const auto& c : numerator) nonzero += c != 0;
  if (nonzero > 1) out << "(";
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const mpz_class& c = numerator[k];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k > 0) out << (mag != 1 ? "*" : "") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  if (first) out << "0";
  if (nonzero > 1) out << ")";
  out << " / ";
  if (denominator.empty()) out << "1";
  for (auto d : denominator) out << "(1 - t" << (d > 1 ? "^" + std::to_string(d) : "") << ")";
  return out.str();
}

mpz_class residue_field_betti(std::int64_t s, std::int64_t i) {
  if (s < 2 || i < 0) throw InputError("residue_field_betti needs s >= 2 and i >= 0");
  if (i == 0) return 1;
  if (i == 1) return s;
  mpz_class base = s - 2, power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(i - 2));  // 0^0 = 1
  return power * (s - 1) * (s - 1);
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> monomials) {
  // Lex-decreasing order, then drop anything divisible by a kept element.
  std::sort(monomials.begin(), monomials.end(), std::greater<>());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<ExponentVector> out;
  for (auto& m : monomials) {
    const bool divisible = std::any_of(monomials.begin(), monomials.end(), [&](const ExponentVector& k) {
      return k != m && dominates(m, k);
    });
    if (!divisible) out.push_back(m);
  }
  return out;
}

std::int64_t fiber_power_generator_count(const std::vector<ExponentVector>& ideal, std::int64_t k) {
  if (k < 0) throw InputError("power must be nonnegative");
  if (k > 12) throw BudgetError("fiber power computation is capped at k = 12");
  if (ideal.empty()) throw InputError("ideal needs at least one generator");
  const auto gens = minimalize(ideal);
  std::vector<ExponentVector> power{ExponentVector(gens.front().size(), 0)};
  for (std::int64_t step = 0; step < k; ++step) {
    std::vector<ExponentVector> next;
    next.reserve(power.size() * gens.size());
    for (const auto& p : power) {
      for (const auto& g : gens) next.push_back(add(p, g));
    }
    power = minimalize(std::move(next));
  }
  return static_cast<std::int64_t>(power.size());
}

}  // namespace veronese
