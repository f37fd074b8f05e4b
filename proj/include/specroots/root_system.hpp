#pragma once

#include <cstddef>
#include <vector>

#include "specroots/cartan.hpp"
#include "specroots/lie_type.hpp"
#include "specroots/vectors.hpp"

namespace specroots {

/// Positive roots of a finite root system, in simple-root coordinates,
/// sorted by height and then lexicographically.
struct RootSystem {
  CartanData cartan;
  std::vector<RootVector> positive_roots;

  int rank() const { return cartan.rank(); }
  std::size_t size() const { return positive_roots.size(); }
  const RootVector& highest_root() const { return positive_roots.back(); }
};

RootSystem build_root_system(LieType t);
RootSystem build_root_system(const CartanData& cd);

/// Closed-form count of positive roots, used to cross-check enumeration.
std::size_t positive_root_count(LieType t);

/// Applies the simple reflection sigma_i (1-based i) in root coordinates:
/// m' = m - <m, alpha_i^vee> e_i.
RootVector reflect_root(int i, const RootVector& v, const CartanData& cd);

/// Applies sigma_i (1-based) on Dynkin labels: a'_k = a_k - a_i C_{ik}.
WeightVector reflect_weight(int i, const WeightVector& v, const CartanData& cd);

}  // namespace specroots
