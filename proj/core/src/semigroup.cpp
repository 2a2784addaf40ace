#include "veronese/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const Wide l = static_cast<Wide>(a / std::gcd(a, b)) * b;
  if (l > std::numeric_limits<std::int64_t>::max()) throw BudgetError("lcm overflows 64 bits");
  return static_cast<std::int64_t>(l);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t x = 0, y = 0;
  extended_gcd(a, m, x, y);
  x %= m;
  return x < 0 ? x + m : x;
}

bool is_zero(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](Exponent e) { return e == 0; });
}

bool has_negative(const ExponentVector& v) {
  return std::any_of(v.begin(), v.end(), [](Exponent e) { return e < 0; });
}

// Whether gens[skip] is a nonnegative combination of the other generators.
bool sum_of_others(const std::vector<ExponentVector>& gens, std::size_t skip) {
  std::set<ExponentVector> dead;
  std::function<bool(const ExponentVector&)> reach = [&](const ExponentVector& p) {
    if (is_zero(p)) return true;
    if (dead.count(p)) return false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != skip && dominates(p, gens[j]) && reach(subtract(p, gens[j]))) return true;
    }
    dead.insert(p);
    return false;
  };
  return reach(gens[skip]);
}

void enumerate_weighted(const std::vector<std::int64_t>& weights, std::size_t index,
                        std::int64_t remaining, ExponentVector& current,
                        std::vector<ExponentVector>& out) {
  if (index + 1 == weights.size()) {
    if (remaining % weights[index] == 0) {
      current[index] = remaining / weights[index];
      out.push_back(current);
    }
    return;
  }
  for (std::int64_t e = remaining / weights[index]; e >= 0; --e) {
    current[index] = e;
    enumerate_weighted(weights, index + 1, remaining - e * weights[index], current, out);
  }
  current[index] = 0;
}

}  // namespace

void VeroneseSpec::validate() const {
  if (weights.size() < 2) throw InputError("a Veronese spec needs at least two weights");
  for (auto w : weights) {
    if (w < 1) throw InputError("weights must be positive");
  }
  if (degree < 1) throw InputError("the Veronese degree must be positive");
}

std::int64_t VeroneseSpec::weighted_degree(const ExponentVector& e) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) total += weights[i] * e[i];
  return total;
}

SemigroupGens::SemigroupGens(std::vector<ExponentVector> gens, std::optional<VeroneseSpec> veronese)
    : gens_(std::move(gens)), veronese_(std::move(veronese)) {
  if (gens_.empty()) throw InputError("a generating set must be nonempty");
  const std::size_t n = gens_.front().size();
  if (n == 0) throw DimensionError("generators must have positive dimension");
  for (const auto& g : gens_) {
    if (g.size() != n) throw DimensionError("generators have mixed dimensions");
    if (has_negative(g)) throw InputError("generator exponents must be nonnegative");
    if (is_zero(g)) throw InputError("the zero vector is not a generator");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i] == gens_[j]) throw InputError("generator " + std::to_string(i) + " is repeated");
    }
    if (sum_of_others(gens_, i)) {
      throw InputError("generator " + std::to_string(i) + " is a sum of the other generators");
    }
  }
  if (veronese_ && veronese_->dimension() != n) {
    throw DimensionError("Veronese metadata does not match the generator dimension");
  }
}

std::vector<std::int64_t> SemigroupGens::degrees(Grading grading) const {
  std::vector<std::int64_t> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) {
    if (grading == Grading::Standard) {
      out.push_back(std::accumulate(g.begin(), g.end(), std::int64_t{0}));
    } else {
      if (!veronese_) throw PreconditionError("weighted degrees need Veronese weights");
      out.push_back(veronese_->weighted_degree(g));
    }
  }
  return out;
}

ExponentVector SemigroupGens::max_exponents() const {
  ExponentVector out(dimension(), 0);
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = std::max(out[i], g[i]);
  }
  return out;
}

SemigroupGens veronese_generators_2d(const VeroneseSpec& spec) {
  spec.validate();
  if (spec.dimension() != 2) throw DimensionError("veronese_generators_2d needs two weights");
  const std::int64_t d = spec.degree;
  const std::int64_t w1 = spec.weights[0] % d;
  const std::int64_t w2 = spec.weights[1] % d;
  const std::int64_t g = std::gcd(w1, d);  // gcd(0, d) = d
  const std::int64_t modulus = d / g;
  const std::int64_t inverse = modulus == 1 ? 0 : mod_inverse(w1 / g, modulus);

  std::vector<ExponentVector> gens;
  std::int64_t min_a = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t b = 0;; ++b) {
    const std::int64_t rhs = ((-w2 * b) % d + d) % d;
    if (rhs % g != 0) continue;
    std::int64_t a = static_cast<std::int64_t>(
        (static_cast<Wide>(rhs / g) * inverse) % modulus);
    if (b == 0) a = modulus;  // the pure power x^{d/g}
    if (a < min_a) {
      gens.push_back({a, b});
      min_a = a;
    }
    if (a == 0) break;
  }
  return SemigroupGens(std::move(gens), spec);
}

std::int64_t generator_degree_bound(const VeroneseSpec& spec) {
  spec.validate();
  std::int64_t total = 0;
  for (auto w : spec.weights) total += checked_lcm(w, spec.degree);
  return total;
}

std::int64_t default_multiple_bound(const VeroneseSpec& spec) {
  return generator_degree_bound(spec) / spec.degree;
}

std::vector<ExponentVector> monomials_of_weighted_degree(const std::vector<std::int64_t>& weights,
                                                         std::int64_t target) {
  if (weights.empty()) throw InputError("need at least one weight");
  for (auto w : weights) {
    if (w < 1) throw InputError("weights must be positive");
  }
  if (target < 0) throw InputError("weighted degree must be nonnegative");
  std::vector<ExponentVector> out;
  ExponentVector current(weights.size(), 0);
  enumerate_weighted(weights, 0, target, current, out);
  return out;
}

GeneratorEnumeration veronese_generators_nd(const VeroneseSpec& spec,
                                            std::optional<std::int64_t> multiple_bound) {
  spec.validate();
  const std::int64_t K = multiple_bound.value_or(default_multiple_bound(spec));
  if (K < 1) throw InputError("the degree bound K must be positive");

  std::vector<ExponentVector> gens;
  for (std::int64_t k = 1; k <= K; ++k) {
    for (auto& m : monomials_of_weighted_degree(spec.weights, k * spec.degree)) {
      // Quotients by a generator keep a degree divisible by d, so divisibility
      // by an earlier generator is the same as decomposability.
      const bool decomposable = std::any_of(gens.begin(), gens.end(),
                                            [&](const ExponentVector& g) { return dominates(m, g); });
      if (!decomposable) gens.push_back(std::move(m));
    }
  }

  GeneratorEnumeration out;
  out.multiple_bound = K;
  const std::int64_t scanned = K * spec.degree;
  out.complete = scanned >= generator_degree_bound(spec);
  if (!out.complete && spec.dimension() == 2 &&
      std::gcd(spec.weights[0], spec.weights[1]) == 1) {
    out.complete = scanned >= max_gen_degree(spec);
  }
  out.gens = SemigroupGens(std::move(gens), spec);
  return out;
}

std::size_t Semigroup::Hash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : v) {
    h ^= std::hash<Exponent>{}(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Semigroup::Semigroup(SemigroupGens gens) : gens_(std::move(gens)) {}

std::int64_t Semigroup::order_locked(const ExponentVector& point) const {
  if (is_zero(point)) return 0;
  if (auto it = order_memo_.find(point); it != order_memo_.end()) return it->second;
  std::int64_t best = -1;
  for (const auto& g : gens_.gens()) {
    if (!dominates(point, g)) continue;
    const std::int64_t rest = order_locked(subtract(point, g));
    if (rest >= 0) best = std::max(best, rest + 1);
  }
  order_memo_.emplace(point, best);
  return best;
}

std::int64_t Semigroup::longest_restricted_locked(const ExponentVector& point,
                                                  std::size_t first_allowed) const {
  if (is_zero(point)) return 0;
  auto& memo = restricted_memo_[first_allowed];
  if (auto it = memo.find(point); it != memo.end()) return it->second;
  std::int64_t best = -1;
  for (std::size_t i = first_allowed; i < gens_.size(); ++i) {
    if (!dominates(point, gens_[i])) continue;
    const std::int64_t rest = longest_restricted_locked(subtract(point, gens_[i]), first_allowed);
    if (rest >= 0) best = std::max(best, rest + 1);
  }
  restricted_memo_[first_allowed].emplace(point, best);
  return best;
}

bool Semigroup::contains(const ExponentVector& point) const {
  if (point.size() != gens_.dimension()) throw DimensionError("point dimension mismatch");
  if (has_negative(point)) return false;
  std::lock_guard lock(mutex_);
  return order_locked(point) >= 0;
}

std::int64_t Semigroup::order(const ExponentVector& point) const {
  if (point.size() != gens_.dimension()) throw DimensionError("point dimension mismatch");
  std::int64_t result = -1;
  if (!has_negative(point)) {
    std::lock_guard lock(mutex_);
    result = order_locked(point);
  }
  if (result < 0) throw DomainError("point is not in the semigroup");
  return result;
}

std::optional<std::vector<std::int64_t>> Semigroup::factorization(const ExponentVector& point,
                                                                  std::size_t first_allowed,
                                                                  std::int64_t min_length) const {
  if (point.size() != gens_.dimension()) throw DimensionError("point dimension mismatch");
  if (has_negative(point)) return std::nullopt;
  std::lock_guard lock(mutex_);
  if (longest_restricted_locked(point, first_allowed) < min_length) return std::nullopt;

  std::vector<std::int64_t> beta(gens_.size(), 0);
  ExponentVector current = point;
  std::int64_t length = 0;
  while (!is_zero(current)) {
    bool advanced = false;
    for (std::size_t i = gens_.size(); i-- > first_allowed;) {
      if (!dominates(current, gens_[i])) continue;
      auto rest = subtract(current, gens_[i]);
      const std::int64_t tail = longest_restricted_locked(rest, first_allowed);
      if (tail >= 0 && length + 1 + tail >= min_length) {
        ++beta[i];
        ++length;
        current = std::move(rest);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InternalError("factorization lost track of a reachable point");
  }
  return beta;
}

bool membership(const SemigroupGens& gens, const ExponentVector& point) {
  return Semigroup(gens).contains(point);
}

std::int64_t m_adic_order(const SemigroupGens& gens, const ExponentVector& point) {
  return Semigroup(gens).order(point);
}

DivisionClosure is_closed_under_division(const SemigroupGens& gens, std::int64_t search_bound) {
  if (gens.veronese()) return {};
  if (search_bound < 0) throw InputError("search bound must be nonnegative");

  const Semigroup semigroup(gens);
  const std::size_t n = gens.dimension();
  std::vector<ExponentVector> members;
  ExponentVector p(n, 0);
  while (true) {
    if (semigroup.contains(p)) members.push_back(p);
    std::size_t axis = 0;
    while (axis < n && p[axis] == search_bound) p[axis++] = 0;
    if (axis == n) break;
    ++p[axis];
  }
  const auto total = [](const ExponentVector& v) {
    return std::accumulate(v.begin(), v.end(), Exponent{0});
  };
  std::sort(members.begin(), members.end(), [&](const ExponentVector& a, const ExponentVector& b) {
    const auto ta = total(a), tb = total(b);
    return ta != tb ? ta < tb : a > b;
  });
  for (const auto& mu1 : members) {
    for (const auto& mu2 : members) {
      if (mu1 == mu2 || !dominates(mu1, mu2)) continue;
      if (!semigroup.contains(subtract(mu1, mu2))) {
        return {false, std::make_pair(mu1, mu2)};
      }
    }
  }
  return {};
}

std::int64_t max_gen_degree(const VeroneseSpec& spec) {
  spec.validate();
  if (spec.dimension() != 2) throw DimensionError("max_gen_degree is a two-variable formula");
  if (std::gcd(spec.weights[0], spec.weights[1]) != 1) {
    throw PreconditionError("max_gen_degree needs coprime weights");
  }
  return std::max(checked_lcm(spec.weights[0], spec.degree),
                  checked_lcm(spec.weights[1], spec.degree));
}

}  // namespace veronese
