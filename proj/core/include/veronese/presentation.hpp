#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "veronese/groebner.hpp"
#include "veronese/lattice.hpp"
#include "veronese/polynomial.hpp"
#include "veronese/semigroup.hpp"

namespace veronese {

struct Blank {
  friend bool operator==(const Blank&, const Blank&) = default;
};

/// The variable t_{index+1}.
struct Variable {
  std::size_t index = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// A monomial in t_1..t_s of total degree >= 2.
struct MonomialEntry {
  Monomial exponents;
  friend bool operator==(const MonomialEntry&, const MonomialEntry&) = default;
};

using MatrixEntry = std::variant<Blank, Variable, MonomialEntry>;

/// One block M_k of the skeleton, spanning generators [first, last] (0-based).
struct BlockDescriptor {
  enum class Shape { Full, Horizontal, Vertical };
  Shape shape = Shape::Full;
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t row = 0;  // top-left cell
  std::size_t col = 0;
};

class PresentationMatrix {
 public:
  PresentationMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  const MatrixEntry& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, MatrixEntry entry);

  bool is_blank(std::size_t r, std::size_t c) const;
  bool is_variable(std::size_t r, std::size_t c) const;
  bool is_filled() const;

  /// Exponent vector over t of a non-blank cell.
  Monomial monomial_at(std::size_t r, std::size_t c) const;

  const std::vector<BlockDescriptor>& blocks() const { return blocks_; }
  void add_block(BlockDescriptor block) { blocks_.push_back(block); }

  /// Bracketed rows with aligned columns; blanks print as "*".
  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<MatrixEntry> entries_;
  std::vector<BlockDescriptor> blocks_;
};

/// The skeleton A_c: blocks for consecutive corners laid along the diagonal,
/// degenerate runs alternating 1x2 and 2x1 starting horizontally.
PresentationMatrix build_skeleton(const ConvexSequence& seq);

/// Fills every blank with a monomial of degree >= 2 so that the matrix has
/// rank one after substitution. Each blank only uses variables later than the
/// diagonal variables of the minors it sits in. Throws ContractViolation
/// naming the cell when no such monomial exists.
PresentationMatrix fill_skeleton(const PresentationMatrix& skeleton, const SemigroupGens& gens);

/// All nonzero 2x2 minors, diagonal product first, deduplicated up to sign,
/// in row-major order of their submatrices.
std::vector<Binomial> minors_2x2(const PresentationMatrix& matrix);

/// Minors whose submatrix has variables on its main diagonal, one per
/// diagonal product. Throws InternalError unless there are C(s-1, 2).
std::vector<Binomial> minimal_minors(const PresentationMatrix& matrix);

struct PresentationCheck {
  bool vanishes = false;
  std::optional<Binomial> witness;   // a minor that does not vanish
  std::optional<bool> ideal_equal;   // set when the toric oracle was consulted
  bool ok() const { return vanishes && ideal_equal.value_or(true); }
};

/// Substitutes t_i -> g_i into every minor; for s <= oracle_cap also compares
/// the ideal of minors with the toric oracle.
PresentationCheck verify_presentation(const PresentationMatrix& matrix, const SemigroupGens& gens,
                                      std::size_t oracle_cap = 8,
                                      const GroebnerBudget& budget = {});

/// d = c m + r with 0 < r < c; two segments iff r | c - 1, then q = (c-1)/r.
/// c = 1 is reported as one segment with m = d, r = q = 0.
struct TwoSegmentSpec {
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::int64_t q = 0;
  bool two_segment = false;
};

TwoSegmentSpec two_segment_classify(std::int64_t c, std::int64_t d);

struct TwoSegmentPresentation {
  PresentationMatrix matrix;
  SemigroupGens gens;  // t_{i+1} -> x^{(m-i)c+r} y^i, then the second segment
};

/// The explicit 3 x (m+r-1) matrix for a two-segment V_{(1,c),d}. When that
/// shape has a single column (m = r = 1) the 2x2 matrix with the same minor
/// is returned; c = 1 gives the single-segment 2 x (s-1) matrix.
TwoSegmentPresentation two_segment_matrix(const TwoSegmentSpec& spec);

}  // namespace veronese
