/**
 * @file gamma.hpp
 * @brief Upper incomplete Gamma function: a double-precision evaluator and
 *        the exactly-known scaled value e^x Gamma(n+1, x) for integer order.
 *
 * For integer order n+1 the scaled function e^x Gamma(n+1, x) is the
 * degree-n polynomial sum_{k=0}^n (n!/k!) x^k, which this module evaluates
 * in exact rational arithmetic for any rational x (the finite sum is the
 * analytic continuation for x <= 0). The numeric evaluator covers real
 * a in (0, 170], x >= 0, switching between the lower-Gamma power series
 * (x < a + 1) and the Legendre continued fraction (x >= a + 1).
 */
#ifndef TNCALC_GAMMA_HPP
#define TNCALC_GAMMA_HPP

#include <stdexcept>

#include "tncalc/exact.hpp"

namespace tncalc {

/// Iteration did not meet the stopping rule within the cap; indicates a
/// domain or tuning bug, not a user error.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stopping rule for the series/continued-fraction iterations.
struct GammaTuning {
  double term_tolerance = 1e-15;  ///< successive-term relative change
  int max_iterations = 500;
};

/// A double paired with the relative-error bound claimed by the algorithm.
struct FloatApprox {
  double value = 0.0;
  double rel_err_bound = 0.0;
};

/// Exact e^x Gamma(n+1, x) = sum_{k=0}^n (n!/k!) x^k for any rational x.
Rational upper_gamma_scaled_exact(unsigned n, const Rational& x);

/// Gamma(a, x) for real a in (0, 170], x >= 0.
/// Throws std::domain_error outside the domain, convergence_error if the
/// iteration cap is hit.
FloatApprox upper_gamma_numeric(double a, double x, const GammaTuning& tuning = {});

/// Relative residual of Gamma(a,x) = e^{-x} x^{a-1} + (a-1) Gamma(a-1,x),
/// all three terms numeric. Requires a > 1, x > 0.
double gamma_recurrence_residual(double a, double x, const GammaTuning& tuning = {});

/// Relative discrepancy between T_n(z) (exact route, converted to double)
/// and e^{z+n} Gamma(n+1, z+n) (numeric route). For z + n <= 0 only the two
/// exact routes are compared; the numeric evaluator is never called there.
/// Throws std::overflow_error when e^{z+n} or T_n(z) exceeds double range.
double verify_tn_gamma(unsigned n, const Rational& z, const GammaTuning& tuning = {});

}  // namespace tncalc

#endif  // TNCALC_GAMMA_HPP
