#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "pbl/rational.hpp"

namespace pbl {

using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;
  // Columns of *this followed by the columns of other.
  RatMatrix hconcat(const RatMatrix& other) const;
  RatMatrix vconcat(const RatMatrix& other) const;
  RatMatrix select_columns(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct Echelon {
  // Integer-valued (fraction-free) row echelon form; row i has its pivot in pivots[i].
  RatMatrix form;
  std::vector<std::size_t> pivots;
};

// Bareiss fraction-free elimination. Each row is first scaled to integer entries;
// the pivot in each column is the first nonzero entry at or below the current row.
Echelon bareiss(const RatMatrix& m);

std::size_t mat_rank(const RatMatrix& m);
std::vector<RatVector> kernel_basis(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
// Some x with m x = b, or nullopt.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

bool is_zero(const RatVector& v);
RatVector unit_vector(std::size_t n, std::size_t i);

// Indices of the first columns (scanning left to right) that are independent.
std::vector<std::size_t> independent_columns(const RatMatrix& m);

// Basis of the intersection of the column spans of a and b (same row count).
std::vector<RatVector> column_span_intersection(const RatMatrix& a, const RatMatrix& b);

// Extend the given independent vectors to a basis of k^n with standard vectors,
// always trying the lowest index first.
std::vector<RatVector> extend_to_basis(const std::vector<RatVector>& vs, std::size_t n);

}  // namespace pbl
