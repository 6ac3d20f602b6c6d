#ifndef LRC_LINALG_HPP
#define LRC_LINALG_HPP

// Dense matrices over a finite field and the one Gaussian-elimination code
// path shared by rank checks, the recovery solve and restriction analysis.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/field.hpp"

namespace lrc {

class Matrix {
 public:
  Matrix(const FiniteField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FiniteField& field() const noexcept { return field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

 private:
  FiniteField field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

/// In-place reduction to reduced row echelon form.  Returns the rank; if
/// pivot_cols is given, it receives the pivot column of each nonzero row.
inline std::size_t row_reduce(Matrix& m, std::vector<std::size_t>* pivot_cols = nullptr) {
  if (pivot_cols) pivot_cols->clear();
  std::size_t pr = 0;  // next pivot row
  for (std::size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, pc).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(sel, c));
    }
    const FieldElement piv_inv = inv(m.at(pr, pc));
    for (std::size_t c = pc; c < m.cols(); ++c) m.at(pr, c) *= piv_inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr || m.at(r, pc).is_zero()) continue;
      const FieldElement f = m.at(r, pc);
      for (std::size_t c = pc; c < m.cols(); ++c) m.at(r, c) -= f * m.at(pr, c);
    }
    if (pivot_cols) pivot_cols->push_back(pc);
    ++pr;
  }
  return pr;
}

inline std::size_t rank(Matrix m) { return row_reduce(m); }

/// Unique solution of the square system A x = b; nullopt when A is singular.
inline std::optional<std::vector<FieldElement>> solve_square(Matrix a,
                                                             std::span<const FieldElement> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw ValidationError("solve_square: shape mismatch");
  Matrix aug(a.field(), n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  std::vector<std::size_t> pivots;
  const std::size_t rk = row_reduce(aug, &pivots);
  if (rk < n || (!pivots.empty() && pivots.back() == n)) return std::nullopt;
  std::vector<FieldElement> x(n, a.field().zero());
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug.at(r, n);
  return x;
}

/// Whether w lies in the row space of a matrix already in RREF with the
/// given pivot columns: reduce w against the rows and test for zero.
inline bool in_row_space(const Matrix& rref, const std::vector<std::size_t>& pivot_cols,
                         std::span<const FieldElement> w) {
  std::vector<FieldElement> rem(w.begin(), w.end());
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    const FieldElement f = rem[pivot_cols[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < rref.cols(); ++c) rem[c] -= f * rref.at(r, c);
  }
  for (const auto& e : rem)
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace lrc

#endif  // LRC_LINALG_HPP
