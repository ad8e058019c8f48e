#pragma once

#include <vector>

#include "flowvol/rational.hpp"

namespace flowvol {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  void append_row(const std::vector<Rational>& row);
  std::vector<Rational> multiply(const std::vector<Rational>& x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-free (Bareiss) row echelon form. Every row of the input is first
// scaled to integers; rows [0, rank) hold the pivot rows, pivot r sits in
// column pivots[r].
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<int> pivots;
  int cols = 0;

  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon bareiss_echelon(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Basis of the right kernel. Each vector is scaled to a primitive integer
// vector whose first nonzero entry is positive. Empty for full column rank.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

}  // namespace flowvol
