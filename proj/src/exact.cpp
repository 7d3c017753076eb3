#include "tncalc/exact.hpp"

#include <cctype>

namespace tncalc {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw parse_error("not a rational: '" + std::string(text) + "'");
  };

  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin) fail();

  std::string_view num_part = text.substr(0, pos);
  std::string_view den_part;
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    den_part = text.substr(pos + 1);
    if (den_part.empty()) fail();
    for (char c : den_part)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
  }

  if (num_part.front() == '+') num_part.remove_prefix(1);  // mpz rejects '+'
  Integer num(std::string(num_part), 10);
  Integer den = den_part.empty() ? Integer(1) : Integer(std::string(den_part), 10);
  if (den == 0) fail();
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_product(unsigned long n, unsigned long k) {
  if (k > n) throw std::domain_error("falling_product: k > n");
  Integer r = 1;
  for (unsigned long i = k + 1; i <= n; ++i) r *= i;
  return r;
}

Rational pow_conv(const Rational& base, unsigned long e) {
  if (e == 0) return Rational(1);
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), e);
  // powers of a canonical fraction stay canonical
  return r;
}

Integer pow_conv(const Integer& base, unsigned long e) {
  if (e == 0) return Integer(1);
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer to_integer(const Rational& value) {
  if (!is_integer(value))
    throw std::domain_error("to_integer: " + to_string(value) + " is not integral");
  return value.get_num();
}

}  // namespace tncalc
