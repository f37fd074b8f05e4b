#pragma once

#include <gmpxx.h>

#include <string>

namespace specroots {

// Exact arithmetic throughout: arbitrary-precision rationals and integers
// from GMP.  Vector coefficients in either basis are machine integers
// (bounded by root-system geometry); rationals appear in symmetrizers,
// inverse Cartan matrices and scalar products.
using Rational = mpq_class;
using BigInt = mpz_class;
using Int = long long;

inline Rational to_rational(Int n) { return Rational(static_cast<signed long>(n)); }
inline BigInt to_bigint(Int n) { return BigInt(static_cast<signed long>(n)); }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Floor of a rational.
inline BigInt rational_floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

}  // namespace specroots
