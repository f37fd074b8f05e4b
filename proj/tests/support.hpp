#pragma once

// Shared test fixtures: the standard type lists exercised by the suites and
// deterministic (fixed-seed) random generators for lattice vectors and words.

#include <random>
#include <vector>

#include "specroots/lie_type.hpp"
#include "specroots/vectors.hpp"
#include "specroots/weyl.hpp"

namespace support {

using specroots::Family;
using specroots::LieType;

/// Types small enough for exhaustive gamma/orbit comparison.
inline std::vector<LieType> gamma_suite() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5},
          {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3}, {Family::C, 4},
          {Family::D, 4}, {Family::G, 2}, {Family::F, 4}};
}

/// Types small enough for the full tuple-solver cross-check.
inline std::vector<LieType> tuple_suite() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
          {Family::B, 2}, {Family::G, 2}, {Family::B, 3}};
}

inline specroots::RootVector random_root(std::mt19937_64& rng, int rank, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<specroots::Int> pick(lo, hi);
  specroots::RootVector v = specroots::RootVector::zero(static_cast<std::size_t>(rank));
  for (auto& c : v.coeffs) c = pick(rng);
  return v;
}

inline specroots::WeightVector random_weight(std::mt19937_64& rng, int rank, int lo = -4,
                                             int hi = 4) {
  std::uniform_int_distribution<specroots::Int> pick(lo, hi);
  specroots::WeightVector v = specroots::WeightVector::zero(static_cast<std::size_t>(rank));
  for (auto& a : v.labels) a = pick(rng);
  return v;
}

inline specroots::WeylWord random_word(std::mt19937_64& rng, int rank, int max_len = 12) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, rank);
  specroots::WeylWord w(static_cast<std::size_t>(len(rng)));
  for (int& l : w) l = letter(rng);
  return w;
}

}  // namespace support
