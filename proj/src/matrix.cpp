#include "specroots/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace specroots {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RationalMatrix::is_positive_definite() const {
  if (!is_symmetric()) return false;
  RationalMatrix a(*this);
  for (std::size_t k = 0; k < rows_; ++k) {
    if (a.at(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < rows_; ++i)
      for (std::size_t j = k + 1; j < cols_; ++j)
        a.at(i, j) -= a.at(i, k) * a.at(k, j) / a.at(k, k);
  }
  return true;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = rows_;
  RationalMatrix a(*this);
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational p = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const Rational f = a.at(row, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(row, j) -= f * a.at(col, j);
        inv.at(row, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace specroots
