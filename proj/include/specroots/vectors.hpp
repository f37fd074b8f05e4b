#pragma once

#include <cstddef>
#include <vector>

#include "specroots/rational.hpp"

namespace specroots {

/// Integer coordinates in the simple-root basis.
///
/// The canonical order used for every root listing in the library is
/// height (coefficient sum) first, lexicographic on the coefficients second.
struct RootVector {
  std::vector<Int> coeffs;

  RootVector() = default;
  explicit RootVector(std::vector<Int> c) : coeffs(std::move(c)) {}
  static RootVector zero(std::size_t rank) { return RootVector(std::vector<Int>(rank, 0)); }

  std::size_t rank() const { return coeffs.size(); }
  Int height() const {
    Int h = 0;
    for (Int c : coeffs) h += c;
    return h;
  }
  bool is_zero() const {
    for (Int c : coeffs)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const RootVector&) const = default;
};

/// Height-then-lex order.
inline bool operator<(const RootVector& a, const RootVector& b) {
  const Int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs < b.coeffs;
}

inline RootVector operator+(const RootVector& a, const RootVector& b) {
  RootVector out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

inline RootVector operator-(const RootVector& a, const RootVector& b) {
  RootVector out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

inline RootVector operator-(const RootVector& a) {
  RootVector out = a;
  for (Int& c : out.coeffs) c = -c;
  return out;
}

/// Integer Dynkin labels, i.e. coordinates in the fundamental-weight basis.
/// Canonical order is plain lexicographic.
struct WeightVector {
  std::vector<Int> labels;

  WeightVector() = default;
  explicit WeightVector(std::vector<Int> l) : labels(std::move(l)) {}
  static WeightVector zero(std::size_t rank) { return WeightVector(std::vector<Int>(rank, 0)); }

  std::size_t rank() const { return labels.size(); }
  bool is_zero() const {
    for (Int a : labels)
      if (a != 0) return false;
    return true;
  }

  bool operator==(const WeightVector&) const = default;
};

inline bool operator<(const WeightVector& a, const WeightVector& b) { return a.labels < b.labels; }

inline WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  WeightVector out = a;
  for (std::size_t i = 0; i < out.labels.size(); ++i) out.labels[i] += b.labels[i];
  return out;
}

inline WeightVector operator-(const WeightVector& a, const WeightVector& b) {
  WeightVector out = a;
  for (std::size_t i = 0; i < out.labels.size(); ++i) out.labels[i] -= b.labels[i];
  return out;
}

}  // namespace specroots
