#pragma once

#include <cstddef>
#include <vector>

#include "specroots/rational.hpp"

namespace specroots {

/// Dense matrix of exact rationals.  Everything here operates on rank-sized
/// Cartan data (n <= 8), so simplicity wins over asymptotics.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const = default;

  bool is_symmetric() const;

  /// Exact positive-definiteness test (Schur-complement pivots all positive).
  bool is_positive_definite() const;

  /// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
  RationalMatrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace specroots
