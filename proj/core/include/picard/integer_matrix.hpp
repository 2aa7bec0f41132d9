#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "picard/eisenstein.hpp"

namespace picard {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<std::vector<Integer>> nonzero_rows() const;
  bool row_is_zero(std::size_t i) const;

  IntegerMatrix transpose() const;
  /// Exact determinant (Bareiss); square matrices only.
  Integer determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Row-style Hermite normal form H = U * M: upper echelon, positive pivots,
/// entries above each pivot reduced into [0, pivot). U is unimodular.
struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix u;
  std::size_t rank = 0;
};
HermiteForm hnf(const IntegerMatrix& m);

/// Smith normal form S = U * M * V with d_1 | d_2 | ... on the diagonal.
struct SmithForm {
  IntegerMatrix s;
  IntegerMatrix u;
  IntegerMatrix v;
  /// Nonzero diagonal entries.
  std::vector<Integer> invariants;
};
SmithForm snf(const IntegerMatrix& m);

/// True iff v is an integer combination of the rows of m.
bool in_row_lattice(const IntegerMatrix& m, std::vector<Integer> v);

/// Rows of a and b generate the same lattice.
bool same_row_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace picard
