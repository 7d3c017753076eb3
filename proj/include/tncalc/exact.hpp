/**
 * @file exact.hpp
 * @brief Exact arithmetic primitives: arbitrary-precision integers and
 *        canonical rationals, plus the combinatorial kernels (binomials,
 *        falling products, powers with the 0^0 = 1 convention) everything
 *        else is built on.
 *
 * Backed by GMP. A Rational is always kept canonical: gcd(|num|, den) = 1
 * and den > 0.
 */
#ifndef TNCALC_EXACT_HPP
#define TNCALC_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tncalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when text cannot be parsed as an integer or "p/q" rational.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical rational num/den. den must be nonzero; the sign moves to the
/// numerator and the fraction is reduced.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q" (optional sign, digits, optional "/digits").
/// The denominator must be a positive integer literal.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" reduced with q > 0, or plain "p" when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// n choose k. Zero for k < 0 or k > n.
Integer binomial(unsigned long n, long k);

/// 1 * 2 * ... * n (empty product for n = 0).
Integer factorial(unsigned long n);

/// The ratio n!/k! computed as the falling product (k+1)(k+2)...n.
/// Requires k <= n.
Integer falling_product(unsigned long n, unsigned long k);

/// base^e with the convention 0^0 = 1.
Rational pow_conv(const Rational& base, unsigned long e);
Integer pow_conv(const Integer& base, unsigned long e);

/// True when the rational is an integer (denominator 1).
inline bool is_integer(const Rational& value) {
  return mpz_cmp_ui(value.get_den_mpz_t(), 1) == 0;
}

/// Numerator of a rational known to be integral; throws std::domain_error
/// otherwise.
Integer to_integer(const Rational& value);

}  // namespace tncalc

#endif  // TNCALC_EXACT_HPP
