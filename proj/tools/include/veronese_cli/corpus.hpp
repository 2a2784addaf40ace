#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "veronese/groebner.hpp"

namespace veronese::cli {

struct CorpusCheck {
  std::string entry;
  std::string check;
  bool pass = false;
  std::string detail;  // diff or witness on failure
  std::string source;  // provenance of the expected value, empty for self-checks
  double seconds = 0;
};

struct CorpusOptions {
  GroebnerBudget budget;
  std::size_t oracle_cap = 8;      // ideal equality and Groebner checks up to this s
  std::size_t defect_cap = 12;
  std::size_t hilbert_terms = 200;
  std::int64_t fiber_powers = 5;
};

/// Runs every entry through generators, presentation, Groebner, Betti,
/// Hilbert and Koszul checks, comparing against stored fixtures.
std::vector<CorpusCheck> verify_corpus(const nlohmann::json& corpus, const CorpusOptions& options);

/// N seeded random two-dimensional specs with 3 <= s <= 8.
nlohmann::json random_corpus(std::size_t count, std::uint64_t seed);

}  // namespace veronese::cli
