#pragma once

#include <vector>

#include "specroots/lie_type.hpp"
#include "specroots/matrix.hpp"
#include "specroots/vectors.hpp"

namespace specroots {

/// Cartan matrix and derived exact data for one Lie type.
///
/// Conventions, fixed once for the whole library (see docs/conventions.md):
///   - C_{ij} = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j);
///   - Bourbaki node numbering within each family;
///   - short roots have squared length 2, so the symmetrizer entries
///     d_j = (alpha_j, alpha_j) / 2 are the integers 1, 2 or 3.
struct CartanData {
  LieType lie_type;
  std::vector<Int> cartan;            // row-major r x r
  std::vector<Rational> symmetrizer;  // d_j
  RationalMatrix inverse_cartan;
  RationalMatrix fundamental_gram;    // G_{ij} = (lambda_i, lambda_j)

  // Integer copies used on hot paths; exact because of the normalization.
  std::vector<Int> root_gram;  // (alpha_i, alpha_j) = C_{ij} d_j
  std::vector<Int> sym_int;    // d_j

  int rank() const { return lie_type.rank; }
  Int cartan_at(int i, int j) const { return cartan[static_cast<std::size_t>(i) * lie_type.rank + j]; }
  Int root_gram_at(int i, int j) const { return root_gram[static_cast<std::size_t>(i) * lie_type.rank + j]; }
};

/// Builds the Cartan matrix, symmetrizer, exact inverse and the Gram matrix
/// of the fundamental weights.  Throws std::invalid_argument on a bad rank.
CartanData build_cartan(LieType t);

/// Fundamental weight lambda_i (1-based index) as Dynkin labels.
WeightVector fundamental_weight(int i, const CartanData& cd);

// --- basis conversions ----------------------------------------------------

/// Dynkin labels of a root-lattice vector: labels_k = sum_a m_a C_{ak}.
WeightVector dynkin_labels(const RootVector& v, const CartanData& cd);

/// Simple-root coordinates of a weight (rational in general).
std::vector<Rational> root_coords(const WeightVector& v, const CartanData& cd);

/// Simple-root coordinates of a weight that must lie in the root lattice;
/// throws std::domain_error when a coordinate is non-integral.
RootVector root_lattice_coords(const WeightVector& v, const CartanData& cd);

// --- scalar products ------------------------------------------------------

// The symmetric bilinear form (x, y), for any mix of bases.  Exact; throws
// std::invalid_argument on dimension mismatch.
Rational sym_product(const RootVector& x, const RootVector& y, const CartanData& cd);
Rational sym_product(const RootVector& x, const WeightVector& y, const CartanData& cd);
Rational sym_product(const WeightVector& x, const RootVector& y, const CartanData& cd);
Rational sym_product(const WeightVector& x, const WeightVector& y, const CartanData& cd);

/// Same form on rational simple-root coordinates (for vectors outside the
/// root lattice, e.g. the A-series mu weights).
Rational sym_product(const std::vector<Rational>& x, const std::vector<Rational>& y,
                     const CartanData& cd);

/// Non-symmetric pairing <lambda, alpha> = 2 (lambda, alpha) / (alpha, alpha).
/// Throws std::invalid_argument when alpha = 0 (undefined) or on mismatch.
Rational pairing(const WeightVector& lam, const RootVector& alpha, const CartanData& cd);

}  // namespace specroots
