#pragma once

#include <json.hpp>

#include "veronese/invariants.hpp"
#include "veronese/koszul.hpp"
#include "veronese/presentation.hpp"
#include "veronese/semigroup.hpp"

namespace veronese::cli {

using nlohmann::json;

// Small integers (indices, exponents, degrees) are JSON numbers; arbitrary
// precision values (Betti numbers, series coefficients) are decimal strings.

json to_json(const SemigroupGens& gens, std::optional<bool> complete = std::nullopt);
SemigroupGens gens_from_json(const json& j);

json points_to_json(const std::vector<ExponentVector>& points);
std::vector<ExponentVector> points_from_json(const json& j);

/// Variables are 1-based: {"var": i} is t_i and {"mono": {"i": e}} lists exponents.
json to_json(const PresentationMatrix& m);
PresentationMatrix matrix_from_json(const json& j);

json to_json(const Binomial& b);
Binomial binomial_from_json(const json& j, std::size_t nvars);

json to_json(const BettiTable& t);
BettiTable betti_from_json(const json& j);

json to_json(const HilbertSeries& hs);
HilbertSeries series_from_json(const json& j);

json to_json(const DefectReport& r);
json to_json(const Polynomial& p);

json big_list(const std::vector<mpz_class>& values);

}  // namespace veronese::cli
