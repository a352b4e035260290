#pragma once

// Dense matrices over R_u with Hermite and Smith normal forms.

#include "primesub/ring.hpp"

#include <cstddef>
#include <vector>

namespace primesub {

using Vector = std::vector<RingElem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix fromRows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix fromColumns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RingElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RingElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  Vector apply(const Vector& x) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElem> data_;
};

Vector scaled(const Vector& v, const RingElem& c);
void axpy(Vector& y, const RingElem& a, const Vector& x);  // y += a*x
bool isZeroVector(const Vector& v);

/// Row-style Hermite normal form of the R_u-span of `rows` (each of length n).
/// Pivots are canonical generators, entries above a pivot p are integers in
/// [0, p), and zero rows are dropped. Two generating sets span the same
/// submodule of R_u^n iff their forms are identical.
std::vector<Vector> hermiteRows(std::vector<Vector> rows, std::size_t n, const RingCtx& ctx);

/// Reduces v against a Hermite basis. Returns the remainder, which is zero iff
/// v lies in the span. If `coeffs` is non-null it receives the combination used.
Vector reduceAgainst(const std::vector<Vector>& hermite, Vector v, std::vector<RingElem>* coeffs = nullptr);

/// Smith form of a relation matrix whose columns are relations on R_u^rows:
/// left * rel * right = diag(diagonal). Entries of `diagonal` are canonical
/// and satisfy the divisibility chain; `invariants` keeps the non-unit ones.
struct SmithForm {
  std::vector<Integer> diagonal;
  std::vector<Integer> invariants;
  std::size_t rank = 0;
  std::size_t freeRank = 0;
  Matrix left;
  Matrix leftInverse;
  Matrix right;
};

SmithForm smithNormalForm(const Matrix& rel, const RingCtx& ctx);

}  // namespace primesub
