#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qdual {

/// Exact rational scalar. Every predicate and every sign decision in the
/// engine is computed in this type; floating point appears only when a
/// numeric value (never a verdict) is requested.
using Rat = mpq_class;
using Int = mpz_class;

/// Parse "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// num/den reduced to canonical form. Prefer this over the raw two-argument
/// mpq_class constructor, which keeps the fraction as given; exact comparison
/// is only reliable on canonical values.
inline Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" or "p/q" with q > 0 and gcd(p, q) = 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

/// r - floor(r), always in [0, 1).
inline Rat frac_part(const Rat& r) { return r - Rat(rat_floor(r)); }

inline int sign_of(const Rat& r) { return sgn(r); }

/// r^e for integer e >= 0, exact.
inline Rat rat_pow(const Rat& r, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num().get_mpz_t(), r.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den().get_mpz_t(), r.get_den().get_mpz_t(), e);
  out.canonicalize();
  return out;
}

/// Same, with the exponent given as an exact nonnegative integer rational.
inline Rat rat_pow(const Rat& r, const Rat& e) {
  if (!is_integer(e) || sign_of(e) < 0)
    throw std::invalid_argument("rat_pow: exponent must be a nonnegative integer");
  return rat_pow(r, mpz_get_ui(e.get_num().get_mpz_t()));
}

}  // namespace qdual
