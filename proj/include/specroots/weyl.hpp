#pragma once

#include <cstddef>
#include <vector>

#include "specroots/cartan.hpp"
#include "specroots/lie_type.hpp"
#include "specroots/root_system.hpp"
#include "specroots/vectors.hpp"

namespace specroots {

/// Sequence of simple-reflection indices (1-based). A word (l1,...,lk) acts
/// rightmost-letter-first: sigma_{l1}(sigma_{l2}(...sigma_{lk}(v)...)).
using WeylWord = std::vector<int>;

/// Length-major order, ties broken lexicographically (ShortLex).
bool shortlex_less(const WeylWord& a, const WeylWord& b);

WeightVector apply_word(const WeylWord& w, const WeightVector& v, const CartanData& cd);
RootVector apply_word(const WeylWord& w, const RootVector& v, const CartanData& cd);

/// Full Weyl orbit of v, sorted lexicographically on Dynkin labels.
std::vector<WeightVector> orbit(const WeightVector& v, const CartanData& cd);

/// Closed-form group order (exact, arbitrary precision).
BigInt group_order(LieType t);

/// Order of the braid relation (sigma_i sigma_j)^m = 1, read off the Cartan
/// matrix: C_{ij} C_{ji} in {0,1,2,3} maps to m in {2,3,4,6}.
int braid_order(int i, int j, const CartanData& cd);

/// A fully enumerated Weyl group: one ShortLex-normal reduced word per
/// element, listed by length and then lexicographically, identity first.
struct WeylGroup {
  CartanData cartan;
  std::vector<WeylWord> elements;

  const LieType& lie_type() const { return cartan.lie_type; }
  std::size_t size() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// BFS from the identity over right multiplication by simple reflections,
/// deduplicating elements by their action on the fundamental-weight tuple.
/// Throws CapExceeded (naming the required cap) when the group order is
/// larger than max_elements.
WeylGroup enumerate_group(const CartanData& cd, std::size_t max_elements = kDefaultEnumerationCap);
WeylGroup enumerate_group(LieType t, std::size_t max_elements = kDefaultEnumerationCap);

}  // namespace specroots
