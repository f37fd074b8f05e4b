#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "specroots/cartan.hpp"
#include "specroots/vectors.hpp"

namespace specroots {

/// The A_r weight system mu_1, ..., mu_{r+1} with mu_1 = lambda_1 and
/// mu_{k+1} = mu_k - alpha_k, stored as rational simple-root coordinates.
/// Satisfies alpha_k = mu_k - mu_{k+1}, sum mu = 0 and
/// (mu_a, mu_b) = delta_ab - 1/(r+1).
struct MuBasis {
  int rank = 0;
  std::vector<std::vector<Rational>> mu;  // r+1 vectors of length r
};

MuBasis mu_basis(int r);

/// Binomial coefficient, exact.
BigInt binomial(unsigned long n, unsigned long m);

/// All nonnegative m with sum m_i^2 = sum_{i<r} m_i m_{i+1} + m_k, scanned
/// over the box m_i <= min(k, r+1-k); zero included; height/lex order.
/// These are exactly the Gamma(k)+ members of A_r.
std::vector<RootVector> diophantine_solutions(int k, int r);

/// Level-s slice of the closed-form construction: one member per choice of
/// s distinct indices from 1..k and s distinct indices from k+1..r+1,
/// gamma = sum_I mu_i - sum_J mu_j. Members are kept one-per-choice (no
/// deduplication) so pairwise distinctness stays testable.
struct PartialGamma {
  int k = 0;
  int s = 0;
  std::vector<RootVector> members;
};

/// Slices s = 0..min(k, r+1-k); the s = 0 slice is {0}.
std::vector<PartialGamma> gamma_closed_form(int k, int r);

/// Both sides of 1 + sum_s B[k,s] B[r+1-k,s] = B[r+1,k], computed
/// independently: lhs from the distinct closed-form member counts per level,
/// rhs as a binomial coefficient.
std::pair<BigInt, BigInt> counting_identity(int k, int r);

/// The A_r diagram automorphism on root coordinates: alpha_i -> alpha_{r+1-i}.
RootVector reverse_coeffs(const RootVector& v);

struct ATableEntry {
  int k = 0;
  std::size_t closed_form_count = 0;  // distinct members across all levels
  std::size_t diophantine_count = 0;
  std::size_t gamma_count = 0;
  bool members_distinct = false;
  bool sets_agree = false;
  BigInt identity_lhs;
  BigInt identity_rhs;
  bool identity_ok = false;
  bool duality_ok = false;

  bool pass() const {
    return members_distinct && sets_agree && identity_ok && duality_ok;
  }
};

struct ATableReport {
  int rank = 0;
  std::vector<ATableEntry> entries;

  bool pass() const;
};

/// For every k: the closed form, the Diophantine scan and the generic
/// Gamma(k)+ search must agree as sets; the counting identity must balance;
/// index reversal must map Gamma(k)+ onto Gamma(r+1-k)+.
ATableReport verify_atype_closed_forms(int r);

}  // namespace specroots
