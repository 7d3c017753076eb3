#include "tncalc/sequences.hpp"

#include <cstddef>

namespace tncalc {

Rational tn_direct(unsigned n, const Rational& x, const Rational& y) {
  Rational total = 0;
  for (unsigned m = 0; m <= n; ++m) {
    Rational left = pow_conv(Rational(x + m), m);
    Rational right = pow_conv(Rational(y + (n - m)), n - m);
    total += Rational(binomial(n, static_cast<long>(m))) * left * right;
  }
  return total;
}

Rational tn_at(unsigned n, const Rational& z, const Rational& x) {
  return tn_direct(n, x, Rational(z - x));
}

Rational tn_recurrence(unsigned n, const Rational& z) {
  // Each descent shifts the argument by +1, so level l is evaluated at
  // z + (n - l); the base case is T_0(z + n) = 1.
  Rational value = 1;
  for (unsigned level = 1; level <= n; ++level) {
    Rational arg = z + Rational(n - level);
    value = pow_conv(Rational(arg + level), level) + Rational(level) * value;
  }
  return value;
}

Rational tn_power_sum(unsigned n, const Rational& z) {
  // Falling coefficients n!/k! built downward from the monic top term.
  std::vector<Integer> falling(n + 1);
  falling[n] = 1;
  for (unsigned k = n; k > 0; --k) falling[k - 1] = falling[k] * k;

  Rational base = z + n;
  Rational power = 1;  // (z+n)^0 with the 0^0 = 1 convention
  Rational total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) power *= base;
    total += Rational(falling[k]) * power;
  }
  return total;
}

Integer subfactorial(unsigned n, SubfactorialMethod method) {
  switch (method) {
    case SubfactorialMethod::sum: {
      std::vector<Integer> falling(n + 1);
      falling[n] = 1;
      for (unsigned k = n; k > 0; --k) falling[k - 1] = falling[k] * k;
      Integer total = 0;
      for (unsigned k = 0; k <= n; ++k) {
        if (k % 2 == 0)
          total += falling[k];
        else
          total -= falling[k];
      }
      return total;
    }
    case SubfactorialMethod::recurrence_sign: {
      Integer d = 1;  // d_0
      for (unsigned k = 1; k <= n; ++k) {
        d = Integer(k) * d + ((k % 2 == 0) ? 1 : -1);
      }
      return d;
    }
    case SubfactorialMethod::recurrence_pair: {
      if (n == 0) return 1;
      if (n == 1) return 0;
      Integer prev2 = 1, prev1 = 0;  // d_0, d_1
      for (unsigned k = 2; k <= n; ++k) {
        Integer d = Integer(k - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = d;
      }
      return prev1;
    }
  }
  throw std::logic_error("subfactorial: bad method");
}

DerangementCache::DerangementCache(std::size_t upto) {
  values_.reserve(upto + 1);
  values_.push_back(1);
  if (upto >= 1) values_.push_back(0);
  for (std::size_t k = 2; k <= upto; ++k)
    values_.push_back(Integer(k - 1) * (values_[k - 1] + values_[k - 2]));
}

Rational tn_shifted_sum(unsigned n, const Rational& z) {
  DerangementCache d(n);
  Rational base = z + n + 1;
  Rational power = 1;
  Rational total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) power *= base;
    total += Rational(binomial(n, static_cast<long>(k)) * d[n - k]) * power;
  }
  return total;
}

Rational TnPolynomial::evaluate(const Rational& z) const {
  // Horner in (z - center).
  Rational u = z - center;
  Rational value = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) value = value * u + coeffs[k];
  return value;
}

namespace {

// In-place Taylor shift: coefficients of p(u) become coefficients of
// p(u + t), by the Horner-style cascade of binomial re-expansions.
void taylor_shift(std::vector<Rational>& coeffs, const Rational& t) {
  if (coeffs.size() < 2 || t == 0) return;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
    for (std::size_t j = coeffs.size() - 1; j-- > i;)
      coeffs[j] += t * coeffs[j + 1];
}

}  // namespace

TnPolynomial tn_polynomial(unsigned n, const Rational& center) {
  TnPolynomial poly;
  poly.degree = n;
  poly.center = center;
  poly.coeffs.resize(n + 1);
  // At center -n the coefficients are exactly n!/k!.
  Integer falling = 1;
  for (unsigned k = n;; --k) {
    poly.coeffs[k] = Rational(falling);
    if (k == 0) break;
    falling *= k;
  }
  // p(z) written in u = z + n; moving to v = z - center means u = v + (n + center).
  taylor_shift(poly.coeffs, Rational(center + n));
  return poly;
}

std::vector<Rational> expansion_coefficients_at(unsigned n, const Rational& center) {
  // Monomial coefficients by direct expansion of each (z+n)^k term.
  std::vector<Rational> mono(n + 1, Rational(0));
  std::vector<Integer> nf(n + 1);
  nf[n] = 1;
  for (unsigned k = n; k > 0; --k) nf[k - 1] = nf[k] * k;
  for (unsigned k = 0; k <= n; ++k) {
    // (z+n)^k = sum_j C(k,j) n^{k-j} z^j
    for (unsigned j = 0; j <= k; ++j) {
      Integer term = nf[k] * binomial(k, static_cast<long>(j)) *
                     pow_conv(Integer(n), k - j);
      mono[j] += Rational(term);
    }
  }

  // a_k = p^(k)(center) / k! by repeated formal differentiation.
  std::vector<Rational> result(n + 1);
  std::vector<Rational> deriv = mono;
  Integer kfact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      kfact *= k;
      // differentiate once
      for (std::size_t j = 1; j < deriv.size(); ++j)
        deriv[j - 1] = Rational(j) * deriv[j];
      deriv.pop_back();
    }
    // evaluate at the center (Horner)
    Rational value = 0;
    for (std::size_t j = deriv.size(); j-- > 0;) value = value * center + deriv[j];
    result[k] = value / Rational(kfact);
  }
  return result;
}

Integer factorial_via_tn(unsigned n) {
  return to_integer(tn_power_sum(n, Rational(-static_cast<long>(n))));
}

std::vector<Integer> egf_derangement_coefficients(std::size_t count) {
  if (count == 0) throw std::domain_error("egf_derangement_coefficients: count must be positive");
  // Cauchy product of e^{-x} (coefficients (-1)^k/k!) with 1/(1-x) (all
  // ones): the n-th product coefficient is sum_{k<=n} (-1)^k/k!, and d_n is
  // that times n!.
  std::vector<Integer> out;
  out.reserve(count);
  Rational partial = 0;
  Integer nfact = 1;
  for (std::size_t n = 0; n < count; ++n) {
    if (n > 0) nfact *= n;
    partial += make_rational((n % 2 == 0) ? Integer(1) : Integer(-1), nfact);
    out.push_back(to_integer(Rational(Rational(nfact) * partial)));
  }
  return out;
}

}  // namespace tncalc
