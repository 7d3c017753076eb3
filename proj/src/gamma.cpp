#include "tncalc/gamma.hpp"

#include <cmath>
#include <limits>

#include "tncalc/sequences.hpp"

namespace tncalc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMaxOrder = 170.0;  // Gamma(a) must stay inside double range

// Lower-Gamma power series: gamma(a,x) = x^a e^{-x} sum_{k>=0} x^k / (a(a+1)...(a+k)).
// Returns the sum and the iteration count through `iters`.
double lower_series_sum(double a, double x, const GammaTuning& tuning, int& iters) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (iters = 1; iters <= tuning.max_iterations; ++iters) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * tuning.term_tolerance) return sum;
  }
  throw convergence_error("upper_gamma_numeric: series did not converge");
}

// Legendre continued fraction for Gamma(a,x)/(x^a e^{-x}), modified Lentz.
double upper_cf(double a, double x, const GammaTuning& tuning, int& iters) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (iters = 1; iters <= tuning.max_iterations; ++iters) {
    double an = -static_cast<double>(iters) * (iters - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < tuning.term_tolerance) return h;
  }
  throw convergence_error("upper_gamma_numeric: continued fraction did not converge");
}

}  // namespace

Rational upper_gamma_scaled_exact(unsigned n, const Rational& x) {
  std::vector<Integer> falling(n + 1);
  falling[n] = 1;
  for (unsigned k = n; k > 0; --k) falling[k - 1] = falling[k] * k;

  Rational power = 1;
  Rational total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) power *= x;
    total += Rational(falling[k]) * power;
  }
  return total;
}

FloatApprox upper_gamma_numeric(double a, double x, const GammaTuning& tuning) {
  if (!(a > 0.0) || !(x >= 0.0) || a > kMaxOrder || std::isnan(a) || std::isnan(x))
    throw std::domain_error("upper_gamma_numeric: requires 0 < a <= 170 and x >= 0");

  if (x == 0.0) {
    // Gamma(a, 0) = Gamma(a)
    return {std::tgamma(a), 8.0 * kEps};
  }

  double log_pref = a * std::log(x) - x;
  int iters = 0;

  if (x < a + 1.0) {
    // Gamma(a,x) = Gamma(a) - gamma(a,x); the series gives gamma.
    double sum = lower_series_sum(a, x, tuning, iters);
    double lower = std::exp(log_pref + std::log(sum));
    double whole = std::tgamma(a);
    double value = whole - lower;
    // Error from the subtraction plus the log-space prefactor and the
    // truncated series.
    double lower_err = lower * kEps * (iters + std::fabs(log_pref + std::log(sum)) + 4.0);
    double whole_err = whole * 8.0 * kEps;
    double bound = (value > 0.0) ? (lower_err + whole_err) / value
                                 : std::numeric_limits<double>::infinity();
    return {value, bound};
  }

  double h = upper_cf(a, x, tuning, iters);
  double log_h = std::log(h);
  double value = std::exp(log_pref + log_h);
  double bound = kEps * (iters + std::fabs(log_pref + log_h) + 4.0);
  return {value, bound};
}

double gamma_recurrence_residual(double a, double x, const GammaTuning& tuning) {
  if (!(a > 1.0) || !(x > 0.0))
    throw std::domain_error("gamma_recurrence_residual: requires a > 1, x > 0");
  double whole = upper_gamma_numeric(a, x, tuning).value;
  double lower_order = upper_gamma_numeric(a - 1.0, x, tuning).value;
  double boundary = std::exp((a - 1.0) * std::log(x) - x);
  return std::fabs(whole - boundary - (a - 1.0) * lower_order) / whole;
}

double verify_tn_gamma(unsigned n, const Rational& z, const GammaTuning& tuning) {
  Rational x = z + n;
  Rational exact = tn_power_sum(n, z);

  if (x <= 0) {
    // Exact-only continuation: both sides are rationals and must coincide.
    Rational scaled = upper_gamma_scaled_exact(n, x);
    if (exact == scaled) return 0.0;
    Rational rel((scaled - exact) / exact);
    return std::fabs(rel.get_d());
  }

  double exact_d = exact.get_d();
  if (std::isinf(exact_d))
    throw std::overflow_error("verify_tn_gamma: T_n(z) exceeds double range");
  double xd = x.get_d();
  if (xd > 709.0)
    throw std::overflow_error("verify_tn_gamma: e^{z+n} exceeds double range");

  FloatApprox g = upper_gamma_numeric(static_cast<double>(n) + 1.0, xd, tuning);
  double numeric = std::exp(xd) * g.value;
  if (std::isinf(numeric))
    throw std::overflow_error("verify_tn_gamma: e^{z+n} Gamma(n+1, z+n) overflows");
  return std::fabs(numeric - exact_d) / std::fabs(exact_d);
}

}  // namespace tncalc
