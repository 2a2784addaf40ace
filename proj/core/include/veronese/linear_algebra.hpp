#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace veronese {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/// Rank over Q by fraction-free (Bareiss) elimination. Rows may be ragged only
/// if empty; the matrix is taken by value and destroyed.
std::size_t bareiss_rank(IntegerMatrix rows);

}  // namespace veronese
