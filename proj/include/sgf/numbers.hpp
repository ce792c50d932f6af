#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgf {

// Exact arithmetic only: counts are Int, fitted coefficients are Rat.
// Nothing in the library touches floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Rationals must stay canonical (positive denominator, gcd 1) so that
// operator== is plain value equality.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline Int rat_den(const Rat& q) { return Int(q.get_den()); }

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("value out of 64-bit range: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Euclidean floor division for nonnegative operands; bounds in the
// enumeration engine only ever divide nonnegative budgets.
inline Int int_fdiv(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline std::string int_str(const Int& v) { return v.get_str(); }

using Index = std::size_t;

}  // namespace sgf
