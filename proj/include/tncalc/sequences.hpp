/**
 * @file sequences.hpp
 * @brief The one-parameter polynomial family T_n(z) and its special-case
 *        sequences, computed entirely in exact arithmetic.
 *
 * Four independent routes to the same value:
 *   - tn_direct:     the defining double-variable binomial sum T_n(x, y)
 *   - tn_recurrence: T_n(z) = (z+n)^n + n T_{n-1}(z+1), T_0 = 1
 *   - tn_power_sum:  T_n(z) = sum_{k=0}^n (n!/k!) (z+n)^k
 *   - tn_shifted_sum: T_n(z) = sum_{k=0}^n C(n,k) d_{n-k} (z+n+1)^k
 *
 * T_n(x, y) depends on x and y only through z = x + y, so the x argument of
 * tn_at is free; the routes must agree exactly for every rational z. Special
 * values: T_n(-n) = n! and T_n(-n-1) = d_n (the derangement numbers).
 */
#ifndef TNCALC_SEQUENCES_HPP
#define TNCALC_SEQUENCES_HPP

#include <cstddef>
#include <vector>

#include "tncalc/exact.hpp"

namespace tncalc {

/// The double sum T_n(x, y) = sum_m C(n,m) (m+x)^m (n-m+y)^{n-m}.
Rational tn_direct(unsigned n, const Rational& x, const Rational& y);

/// T_n(z) evaluated as tn_direct(n, x, z - x). The result is independent of
/// x; that is a contract enforced by tests, not by construction.
Rational tn_at(unsigned n, const Rational& z, const Rational& x);

/// Descending recurrence T_n(z) = (z+n)^n + n T_{n-1}(z+1) with T_0(z) = 1.
Rational tn_recurrence(unsigned n, const Rational& z);

/// Finite expansion sum_{k=0}^n (n!/k!) (z+n)^k, coefficients as falling
/// products.
Rational tn_power_sum(unsigned n, const Rational& z);

enum class SubfactorialMethod {
  sum,              ///< d_n = sum_{k=0}^n (-1)^k n!/k!
  recurrence_sign,  ///< d_n = n d_{n-1} + (-1)^n
  recurrence_pair,  ///< d_n = (n-1)(d_{n-1} + d_{n-2})
};

/// Derangement number d_n by the chosen route. All routes agree.
Integer subfactorial(unsigned n, SubfactorialMethod method = SubfactorialMethod::sum);

/// Derangement numbers d_0..d_{upto}, built once by the pair recurrence.
class DerangementCache {
 public:
  explicit DerangementCache(std::size_t upto);
  const Integer& operator[](std::size_t k) const { return values_.at(k); }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Integer> values_;
};

/// Expansion around -(n+1): sum_k C(n,k) d_{n-k} (z+n+1)^k.
Rational tn_shifted_sum(unsigned n, const Rational& z);

/// T_n expressed by its coefficients in powers of (z - center).
struct TnPolynomial {
  unsigned degree = 0;
  Rational center;              ///< coefficients are for powers of (z - center)
  std::vector<Rational> coeffs; ///< size degree + 1, monic

  Rational evaluate(const Rational& z) const;
};

/// Coefficients of T_n in powers of (z - center). Starts from the exact
/// n!/k! coefficients at center -n and recenters by a Horner-style Taylor
/// shift (exact binomial re-expansion).
TnPolynomial tn_polynomial(unsigned n, const Rational& center);

/// Same coefficients by the independent route: expand the monomial-basis
/// polynomial term by term, then take formal derivatives at the center.
/// Deliberately redundant with tn_polynomial; serves as its oracle.
std::vector<Rational> expansion_coefficients_at(unsigned n, const Rational& center);

/// n! obtained as T_n(-n) through the power-sum route.
Integer factorial_via_tn(unsigned n);

/// First `count` derangement numbers from the exact Cauchy product of the
/// series for e^{-x} and 1/(1-x), scaled by n!.
std::vector<Integer> egf_derangement_coefficients(std::size_t count);

}  // namespace tncalc

#endif  // TNCALC_SEQUENCES_HPP
