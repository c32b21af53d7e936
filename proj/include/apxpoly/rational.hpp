#ifndef APXPOLY_RATIONAL_HPP
#define APXPOLY_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "apxpoly/errors.hpp"

namespace apxpoly {

// Exact arbitrary-precision scalars. All arithmetic in this library is
// performed on canonical rationals: positive denominator, coprime with the
// numerator. GMP keeps arithmetic results canonical as long as the inputs
// are; the constructors below are the only places a raw value enters.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/** Builds the canonical rational num/den. Throws ParseError on den == 0. */
Rational make_rational(const BigInt& num, const BigInt& den);

/** Parses "p/q" or "p" (optionally signed). Result is canonical. */
Rational parse_rational(std::string_view text);

/** Canonical text form: "p/q" with q > 1, plain "p" for integers. */
std::string to_string(const Rational& value);

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline int rat_sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

/** Largest integer n with n*n <= v. Requires v >= 0. */
BigInt isqrt_floor(const BigInt& v);

/**
 * Rational enclosure of sqrt(q): returns lo with lo <= sqrt(q) <= lo + width
 * and width <= prec. Requires q >= 0 and prec > 0.
 */
Rational sqrt_lower(const Rational& q, const Rational& prec);
Rational sqrt_upper(const Rational& q, const Rational& prec);

/** Sign of sqrt(a) - c for a >= 0: exact comparison without radicals. */
int compare_sqrt(const Rational& a, const Rational& c);

}  // namespace apxpoly

#endif  // APXPOLY_RATIONAL_HPP
