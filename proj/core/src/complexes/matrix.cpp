#include "detcycle/complexes/matrix.hpp"

#include <bit>
#include <sstream>

#include "detcycle/errors.hpp"

namespace detcycle::complexes {

Matrix::Matrix(RingPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, RingElem(ctx_)) {}

Matrix Matrix::from_rows(RingPtr ctx, const std::vector<std::vector<RingElem>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ctx, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) {
      arith::require_same(rows[r][c].context(), ctx);
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::identity(RingPtr ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElem::one(ctx);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
  arith::require_same(ctx_, other.ctx_);
  if (cols_ != other.rows_) throw InvalidInput("matrix product dimension mismatch");
  Matrix out(ctx_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const RingElem& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const RingElem& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  arith::require_same(ctx_, other.ctx_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix sum shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  arith::require_same(ctx_, other.ctx_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix sum shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix out(ctx_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

Matrix Matrix::columns(std::size_t begin, std::size_t end) const {
  Matrix out(ctx_, rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  arith::require_same(ctx_, other.ctx_);
  if (rows_ != other.rows_) throw InvalidInput("hconcat row mismatch");
  Matrix out(ctx_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  arith::require_same(a.ctx_, b.ctx_);
  Matrix out(a.ctx_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
  }
  return out;
}

Matrix Matrix::map(RingElem (*f)(const RingElem&)) const {
  Matrix out(*this);
  for (auto& e : out.data_) e = f(e);
  return out;
}

RingElem Matrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return RingElem::one(ctx_);
  if (n > 16) throw InvalidInput("determinant: matrix too large for exact expansion");
  // dp[mask] = det of rows 0..|mask|-1 restricted to the columns in mask,
  // expanded along its last row.
  std::vector<RingElem> dp(std::size_t{1} << n, RingElem(ctx_));
  dp[0] = RingElem::one(ctx_);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    RingElem acc(ctx_);
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const RingElem& entry = (*this)(row, c);
      const RingElem& sub = dp[mask & ~(1U << c)];
      if (entry.is_zero() || sub.is_zero()) continue;
      const int above = std::popcount(mask >> (c + 1));
      if (above % 2 == 0) {
        acc += entry * sub;
      } else {
        acc -= entry * sub;
      }
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = rows_;
  const RingElem det_inv = invert_ring_unit(determinant());
  Matrix out(ctx_, n, n);
  std::vector<std::size_t> rs;
  std::vector<std::size_t> cs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Cofactor of entry (j, i).
      rs.clear();
      cs.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rs.push_back(k);
        if (k != i) cs.push_back(k);
      }
      RingElem minor = select(rs, cs).determinant();
      if ((i + j) % 2 == 1) minor = -minor;
      out(i, j) = minor * det_inv;
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RingElem invert_ring_unit(const RingElem& a) {
  const RingElem b = arith::augment(a);
  if (!b.is_nonzero_constant()) {
    throw InvalidInput(a.to_string() + " is not a unit of the polynomial ring");
  }
  const arith::Rational c_inv = b.constant_value().inverse();
  // (c + n)^{-1} = c^{-1} * sum_k (-n/c)^k, finite since n is nilpotent.
  const RingElem step = (-arith::rho_split(a)).scaled(c_inv);
  RingElem term = RingElem::constant(a.context(), c_inv);
  RingElem sum(a.context());
  while (!term.is_zero()) {
    sum += term;
    term = term * step;
  }
  return sum;
}

}  // namespace detcycle::complexes
