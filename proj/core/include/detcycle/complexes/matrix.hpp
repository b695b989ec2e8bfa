#pragma once

#include <span>
#include <string>
#include <vector>

#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::complexes {

using arith::RingElem;
using arith::RingPtr;

// Dense matrix of ring elements, row-major.
class Matrix {
 public:
  Matrix(RingPtr ctx, std::size_t rows, std::size_t cols);
  // Throws InvalidInput on ragged input; all entries must share ctx.
  static Matrix from_rows(RingPtr ctx, const std::vector<std::vector<RingElem>>& rows);
  static Matrix identity(RingPtr ctx, std::size_t n);

  const RingPtr& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const RingElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RingElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Submatrix on the given row and column indices, in the given order.
  Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix columns(std::size_t begin, std::size_t end) const;
  // [this | other]
  Matrix hconcat(const Matrix& other) const;
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  Matrix map(RingElem (*f)(const RingElem&)) const;

  // Exact determinant by cofactor expansion memoized over column subsets;
  // no division, so valid over any commutative ring. Requires a square
  // matrix of size <= 20.
  RingElem determinant() const;
  // Inverse of a square matrix whose determinant is a unit of Q[x] (x) A,
  // i.e. has a nonzero constant augmentation. Uses the adjugate.
  Matrix inverse() const;

  // "[[a, b], [c, d]]" with canonical entries.
  std::string to_string() const;

 private:
  RingPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElem> data_;
};

// Inverse of an element of Q[x] (x) A with nonzero constant augmentation.
RingElem invert_ring_unit(const RingElem& a);

}  // namespace detcycle::complexes
