#include "veronese/presentation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

std::string cell_name(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

Monomial unit(std::size_t nvars, std::size_t i, Exponent e = 1) {
  Monomial m(nvars, 0);
  m[i] = e;
  return m;
}

std::int64_t binomial2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

PresentationMatrix::PresentationMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Blank{}) {
  if (rows == 0 || cols == 0) throw InputError("presentation matrix needs at least one cell");
}

void PresentationMatrix::set(std::size_t r, std::size_t c, MatrixEntry entry) {
  if (r >= rows_ || c >= cols_) throw InputError("cell " + cell_name(r, c) + " is out of range");
  if (const auto* v = std::get_if<Variable>(&entry); v && v->index >= nvars_) {
    throw InputError("variable index out of range");
  }
  if (const auto* m = std::get_if<MonomialEntry>(&entry)) {
    if (m->exponents.size() != nvars_) throw DimensionError("monomial entry has the wrong length");
    if (std::any_of(m->exponents.begin(), m->exponents.end(), [](Exponent e) { return e < 0; }) ||
        total_degree(m->exponents) < 2) {
      throw InputError("monomial entries need nonnegative exponents and degree >= 2");
    }
  }
  entries_[r * cols_ + c] = std::move(entry);
}

bool PresentationMatrix::is_blank(std::size_t r, std::size_t c) const {
  return std::holds_alternative<Blank>(at(r, c));
}

bool PresentationMatrix::is_variable(std::size_t r, std::size_t c) const {
  return std::holds_alternative<Variable>(at(r, c));
}

bool PresentationMatrix::is_filled() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const MatrixEntry& e) { return std::holds_alternative<Blank>(e); });
}

Monomial PresentationMatrix::monomial_at(std::size_t r, std::size_t c) const {
  const MatrixEntry& e = at(r, c);
  if (const auto* v = std::get_if<Variable>(&e)) return unit(nvars_, v->index);
  if (const auto* m = std::get_if<MonomialEntry>(&e)) return m->exponents;
  throw StateError("cell " + cell_name(r, c) + " is blank");
}

std::string PresentationMatrix::to_string() const {
  std::vector<std::string> text(entries_.size());
  std::vector<std::size_t> width(cols_, 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      auto& cell = text[r * cols_ + c];
      cell = is_blank(r, c) ? "*" : monomial_to_string(monomial_at(r, c));
      width[c] = std::max(width[c], cell.size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& cell = text[r * cols_ + c];
      out << " " << cell << std::string(width[c] - cell.size(), ' ');
    }
    out << " ]\n";
  }
  return out.str();
}

PresentationMatrix build_skeleton(const ConvexSequence& seq) {
  const std::size_t s = seq.size();
  if (s < 2) throw InputError("a skeleton needs at least two generators");
  const auto corners = corner_points(seq);

  // First pass: place blocks on an unbounded grid to learn the shape.
  std::vector<BlockDescriptor> blocks;
  std::size_t row = 0, col = 0;
  bool next_degenerate_horizontal = true;
  for (std::size_t k = 0; k + 1 < corners.size(); ++k) {
    BlockDescriptor b;
    b.first = corners[k];
    b.last = corners[k + 1];
    b.row = row;
    b.col = col;
    const std::size_t gap = b.last - b.first;
    if (gap >= 2) {
      b.shape = BlockDescriptor::Shape::Full;
      row += 1;
      col += gap - 1;
      next_degenerate_horizontal = true;
    } else if (next_degenerate_horizontal) {
      b.shape = BlockDescriptor::Shape::Horizontal;
      col += 1;
      next_degenerate_horizontal = false;
    } else {
      b.shape = BlockDescriptor::Shape::Vertical;
      row += 1;
      next_degenerate_horizontal = true;
    }
    blocks.push_back(b);
  }

  PresentationMatrix m(row + 1, col + 1, s);
  for (const auto& b : blocks) {
    switch (b.shape) {
      case BlockDescriptor::Shape::Full:
        for (std::size_t i = b.first; i < b.last; ++i) {
          m.set(b.row, b.col + (i - b.first), Variable{i});
          m.set(b.row + 1, b.col + (i - b.first), Variable{i + 1});
        }
        break;
      case BlockDescriptor::Shape::Horizontal:
        m.set(b.row, b.col, Variable{b.first});
        m.set(b.row, b.col + 1, Variable{b.last});
        break;
      case BlockDescriptor::Shape::Vertical:
        m.set(b.row, b.col, Variable{b.first});
        m.set(b.row + 1, b.col, Variable{b.last});
        break;
    }
    m.add_block(b);
  }
  return m;
}

PresentationMatrix fill_skeleton(const PresentationMatrix& skeleton, const SemigroupGens& gens) {
  const std::size_t R = skeleton.rows(), C = skeleton.cols();
  if (gens.size() != skeleton.nvars()) {
    throw InputError("skeleton and generators disagree on the number of variables");
  }
  const std::size_t n = gens.dimension();

  // Rank one after substitution means cell (r, c) evaluates to rho_r + gamma_c.
  std::vector<std::optional<ExponentVector>> rho(R), gamma(C);
  rho[0] = ExponentVector(n, 0);
  std::deque<std::pair<bool, std::size_t>> queue{{true, 0}};
  while (!queue.empty()) {
    const auto [is_row, idx] = queue.front();
    queue.pop_front();
    for (std::size_t other = 0; other < (is_row ? C : R); ++other) {
      const std::size_t r = is_row ? idx : other, c = is_row ? other : idx;
      if (!skeleton.is_variable(r, c)) continue;
      const ExponentVector& g = gens[std::get<Variable>(skeleton.at(r, c)).index];
      auto& known = is_row ? rho[r] : gamma[c];
      auto& target = is_row ? gamma[c] : rho[r];
      const ExponentVector value = subtract(g, *known);
      if (!target) {
        target = value;
        queue.push_back({!is_row, other});
      } else if (*target != value) {
        throw ContractViolation("variable cells are inconsistent at " + cell_name(r, c));
      }
    }
  }
  for (std::size_t r = 0; r < R; ++r) {
    if (!rho[r]) throw ContractViolation("row " + std::to_string(r + 1) + " has no variable cell");
  }
  for (std::size_t c = 0; c < C; ++c) {
    if (!gamma[c]) throw ContractViolation("column " + std::to_string(c + 1) + " has no variable cell");
  }

  auto var_index = [&](std::size_t r, std::size_t c) -> std::optional<std::size_t> {
    if (!skeleton.is_variable(r, c)) return std::nullopt;
    return std::get<Variable>(skeleton.at(r, c)).index;
  };

  const Semigroup semigroup(gens);
  PresentationMatrix filled = skeleton;
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      if (!skeleton.is_blank(r, c)) continue;
      // Smallest generator index usable here: later than the smaller diagonal
      // variable of every minor with variable diagonal that has this cell off
      // the diagonal.
      std::size_t first_allowed = 0;
      auto consider = [&](std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
        const auto a = var_index(r1, c1), b = var_index(r2, c2);
        if (a && b) first_allowed = std::max(first_allowed, std::min(*a, *b) + 1);
      };
      for (std::size_t r2 = r + 1; r2 < R; ++r2) {
        for (std::size_t c1 = 0; c1 < c; ++c1) consider(r, c1, r2, c);  // top-right corner
      }
      for (std::size_t r1 = 0; r1 < r; ++r1) {
        for (std::size_t c2 = c + 1; c2 < C; ++c2) consider(r1, c, r, c2);  // bottom-left corner
      }
      const ExponentVector value = add(*rho[r], *gamma[c]);
      if (std::any_of(value.begin(), value.end(), [](Exponent e) { return e < 0; })) {
        throw ContractViolation("cell " + cell_name(r, c) + " would need a negative exponent");
      }
      const auto beta = semigroup.factorization(value, first_allowed, 2);
      if (!beta) {
        throw ContractViolation("cell " + cell_name(r, c) + ": quotient is not a product of at least "
                                "two generators with index > " + std::to_string(first_allowed));
      }
      filled.set(r, c, MonomialEntry{*beta});
    }
  }
  return filled;
}

std::vector<Binomial> minors_2x2(const PresentationMatrix& matrix) {
  if (!matrix.is_filled()) throw StateError("minors need a fully filled matrix");
  std::vector<Binomial> out;
  for (std::size_t r1 = 0; r1 < matrix.rows(); ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < matrix.rows(); ++r2) {
      for (std::size_t c1 = 0; c1 < matrix.cols(); ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < matrix.cols(); ++c2) {
          Binomial b{add(matrix.monomial_at(r1, c1), matrix.monomial_at(r2, c2)),
                     add(matrix.monomial_at(r1, c2), matrix.monomial_at(r2, c1))};
          if (b.is_zero()) continue;
          const bool seen = std::any_of(out.begin(), out.end(),
                                        [&](const Binomial& o) { return o.same_up_to_sign(b); });
          if (!seen) out.push_back(std::move(b));
        }
      }
    }
  }
  return out;
}

std::vector<Binomial> minimal_minors(const PresentationMatrix& matrix) {
  if (!matrix.is_filled()) throw StateError("minors need a fully filled matrix");
  std::vector<Binomial> out;
  std::set<Monomial> diagonals;
  for (std::size_t r1 = 0; r1 < matrix.rows(); ++r1) {
    for (std::size_t c1 = 0; c1 < matrix.cols(); ++c1) {
      if (!matrix.is_variable(r1, c1)) continue;
      for (std::size_t r2 = r1 + 1; r2 < matrix.rows(); ++r2) {
        for (std::size_t c2 = c1 + 1; c2 < matrix.cols(); ++c2) {
          if (!matrix.is_variable(r2, c2)) continue;
          Monomial diag = add(matrix.monomial_at(r1, c1), matrix.monomial_at(r2, c2));
          if (!diagonals.insert(diag).second) continue;
          out.push_back({std::move(diag), add(matrix.monomial_at(r1, c2), matrix.monomial_at(r2, c1))});
        }
      }
    }
  }
  const auto expected = binomial2(static_cast<std::int64_t>(matrix.nvars()) - 1);
  if (static_cast<std::int64_t>(out.size()) != expected) {
    throw InternalError("found " + std::to_string(out.size()) + " minimal minors, expected " +
                        std::to_string(expected));
  }
  return out;
}

PresentationCheck verify_presentation(const PresentationMatrix& matrix, const SemigroupGens& gens,
                                      std::size_t oracle_cap, const GroebnerBudget& budget) {
  if (gens.size() != matrix.nvars()) {
    throw InputError("matrix and generators disagree on the number of variables");
  }
  PresentationCheck check;
  const auto minors = minors_2x2(matrix);
  for (const auto& b : minors) {
    if (!vanishes(b, gens)) {
      check.witness = b;
      return check;
    }
  }
  check.vanishes = true;
  if (gens.size() <= oracle_cap) {
    const TermOrder lex = TermOrder::lex(gens.size());
    ToricOptions options;
    options.max_generators = oracle_cap;
    options.budget = budget;
    const BinomialIdeal toric = toric_ideal(gens, options);
    check.ideal_equal =
        ideal_equal(BinomialIdeal::from_binomials(minors, gens.size(), lex), toric, budget);
  }
  return check;
}

TwoSegmentSpec two_segment_classify(std::int64_t c, std::int64_t d) {
  if (c <= 0 || c >= d) throw PreconditionError("two-segment classification needs 0 < c < d");
  if (std::gcd(c, d) != 1) throw PreconditionError("c and d must be coprime");
  TwoSegmentSpec spec{c, d, d / c, d % c, 0, false};
  if (c == 1) {
    spec.two_segment = true;  // all generators x^{d-i} y^i lie on one segment
    return spec;
  }
  if ((c - 1) % spec.r == 0) {
    spec.q = (c - 1) / spec.r;
    spec.two_segment = true;
  }
  return spec;
}

TwoSegmentPresentation two_segment_matrix(const TwoSegmentSpec& spec) {
  if (!spec.two_segment) throw PreconditionError("spec does not lie on at most two segments");
  const std::int64_t c = spec.c, d = spec.d, m = spec.m, r = spec.r, q = spec.q;

  if (c == 1) {
    std::vector<ExponentVector> pts;
    for (std::int64_t i = 0; i <= d; ++i) pts.push_back({d - i, i});
    SemigroupGens gens(pts, VeroneseSpec{{1, 1}, d});
    const std::size_t s = pts.size();
    PresentationMatrix mat(2, s - 1, s);
    for (std::size_t i = 0; i + 1 < s; ++i) {
      mat.set(0, i, Variable{i});
      mat.set(1, i, Variable{i + 1});
    }
    mat.add_block({BlockDescriptor::Shape::Full, 0, s - 1, 0, 0});
    return {std::move(mat), std::move(gens)};
  }

  std::vector<ExponentVector> pts;
  for (std::int64_t i = 0; i <= m; ++i) pts.push_back({(m - i) * c + r, i});
  for (std::int64_t j = r - 1; j >= 0; --j) pts.push_back({j, d - (m * q + 1) * j});
  SemigroupGens gens(pts, VeroneseSpec{{1, c}, d});
  const std::size_t s = pts.size();  // m + r + 1
  const auto t = [](std::int64_t one_based) { return static_cast<std::size_t>(one_based - 1); };
  const auto mono = [&](std::vector<std::pair<std::int64_t, Exponent>> factors) {
    Monomial e(s, 0);
    for (auto [v, k] : factors) e[t(v)] += k;
    return MonomialEntry{e};
  };

  if (m == 1 && r == 1) {
    // Three generators; the single relation t1 t3 = t2^{q+2}.
    PresentationMatrix mat(2, 2, s);
    mat.set(0, 0, Variable{0});
    mat.set(0, 1, Variable{1});
    mat.set(1, 0, mono({{2, q + 1}}));
    mat.set(1, 1, Variable{2});
    return {std::move(mat), std::move(gens)};
  }

  const auto cols = static_cast<std::size_t>(m + r - 1);
  PresentationMatrix mat(3, cols, s);
  for (std::int64_t x = 0; x < m; ++x) mat.set(0, x, Variable{t(x + 1)});
  if (r > 1) mat.set(0, m, mono({{m + 1, q + 1}}));  // with r = 1 the row ends at t_m
  // Row 0 is row 1 shifted by x^c y^{-1} = m_{m+1}^q / (step along the second segment).
  for (std::int64_t y = 1; y <= r - 2; ++y) mat.set(0, m + y, mono({{m + 1, q}, {m + 1 + y, 1}}));
  for (std::int64_t x = 0; x < m; ++x) mat.set(1, x, Variable{t(x + 2)});
  for (std::int64_t y = 0; m + y < static_cast<std::int64_t>(cols); ++y) {
    mat.set(1, m + y, Variable{t(m + 2 + y)});
  }
  for (std::int64_t x = 0; x < m - 1; ++x) {
    mat.set(2, x, mono({{x + 3, 1}, {m + 1, q}}));
  }
  for (std::int64_t y = 0; y < r; ++y) mat.set(2, m - 1 + y, Variable{t(m + 2 + y)});
  return {std::move(mat), std::move(gens)};
}

}  // namespace veronese
