#pragma once

// Reference values and reference evaluators that share no code with the
// library. Frozen numbers were produced with mpmath at 30 digits.

#include <cmath>

namespace oracle {

inline constexpr double kSqrtPi = 1.7724538509055160273;

// E_{1/2}(-x) = exp(x^2) erfc(x).
inline double ml_half_negative(double x) { return std::exp(x * x) * std::erfc(x); }

inline constexpr double kMlHalfMinusOne = 0.4275835761558070;

// Two-parameter series sum_k z^k / Gamma(alpha k + beta) in long double,
// summed until the terms are negligible. Only usable where sum |term| stays
// within a few orders of magnitude of the sum.
inline long double ml2_series(long double alpha, long double beta, long double z) {
  long double sum = 0.0L;
  const long double log_abs_z = std::log(std::fabs(z));
  for (int k = 0; k < 100000; ++k) {
    long double term = 1.0L;
    if (k > 0) {
      if (z == 0.0L) break;
      term = std::exp(k * log_abs_z - std::lgamma(alpha * k + beta));
      if (z < 0.0L && k % 2 == 1) term = -term;
    } else {
      term = 1.0L / std::tgamma(beta);
    }
    sum += term;
    if (k > 10 && alpha * k + beta > std::fabs(z) + 2.0L && std::fabs(term) < 1e-24L * std::fabs(sum)) break;
  }
  return sum;
}

inline double ml_series(double alpha, double z) { return static_cast<double>(ml2_series(alpha, 1.0L, z)); }

// E_alpha(-x) from mpmath.
struct MlEntry {
  double alpha;
  double x;
  double value;
};

inline constexpr MlEntry kMlTable[] = {
    {0.1, 1.0, 0.48556446431108210},  {0.1, 5.0, 0.15804238235845183},  {0.1, 10.0, 0.085696957010654685},
    {0.1, 30.0, 0.030265975870874509}, {0.3, 1.0, 0.45659440832969067},  {0.3, 5.0, 0.13708086902027064},
    {0.3, 10.0, 0.072649729072772085}, {0.3, 30.0, 0.025182617502927663}, {0.5, 1.0, 0.42758357615580700},
    {0.5, 5.0, 0.11070463773306863},  {0.5, 10.0, 0.056140992743822586}, {0.5, 30.0, 0.018795888861416751},
    {0.8, 1.0, 0.38694857861897685},  {0.8, 5.0, 0.05759538476215225},  {0.8, 10.0, 0.024902819761976537},
    {0.8, 30.0, 0.0075758607992192},  {0.9, 1.0, 0.37606602142464188},  {0.9, 5.0, 0.034431324804098424},
    {0.9, 10.0, 0.012820606051102103}, {0.9, 30.0, 0.0037137076984599},  {0.99, 1.0, 0.36854831806033962},
    {0.99, 5.0, 0.0097680921391741},  {0.99, 10.0, 0.0013478638060832}, {0.99, 30.0, 0.00035975605168217},
    {0.999, 5.0, 0.0070439569266840406}, {0.999, 30.0, 3.5830164124046603e-5},
};

// Riemann-Liouville integral of x^n from 0 at tau.
inline double rl_monomial(int n, double alpha, double tau) {
  return std::tgamma(n + 1.0) / std::tgamma(n + 1.0 + alpha) * std::pow(tau, n + alpha);
}

// AB left integral of e^x on [0, 1] at tau = 1, alpha = 1/2, B = 1, and its
// Riemann-Liouville part.
inline constexpr double kAbLeftExp = 2.504490040381141733;
inline constexpr double kRlLeftExp = 2.290698252303238;

// Caputo-sense (ABC) and Riemann-sense (ABR) derivatives with B = 1, a = 0.
inline constexpr double kAbcLinearTau1Half = 1.111925486502639157;   // f = x, tau = 1, alpha = 1/2
inline constexpr double kAbrLinearTauHalf = 0.642082289066224198;    // f = x, tau = 1/2, alpha = 1/2
inline constexpr double kAbrOneTauHalf = 1.046313167460493487;       // f = 1, tau = 1/2, alpha = 1/2
inline constexpr double kAbcSquareTauHalf = 0.348010659202935538;    // f = x^2, tau = 1/2, alpha = 1/2

// ABC of x^n from 0 by term-wise integration of the kernel series:
//   n = 1: tau E_{a,2}(-l tau^a) / (1 - a),  n = 2: 2 tau^2 E_{a,3}(-l tau^a) / (1 - a),
// with l = a / (1 - a).
inline double abc_monomial(int n, double alpha, double tau) {
  const long double lam = alpha / (1.0L - alpha);
  const long double z = -lam * std::pow(static_cast<long double>(tau), static_cast<long double>(alpha));
  const long double fact = std::tgamma(n + 1.0L);
  return static_cast<double>(fact * std::pow(static_cast<long double>(tau), n) * ml2_series(alpha, n + 1.0L, z) /
                             (1.0L - alpha));
}

// ABR of a constant c from a: c E_a(-l (tau - a)^a) / (1 - a).
inline double abr_constant(double c, double a, double alpha, double tau) {
  const long double lam = alpha / (1.0L - alpha);
  const long double z = -lam * std::pow(static_cast<long double>(tau - a), static_cast<long double>(alpha));
  return static_cast<double>(c * ml2_series(alpha, 1.0L, z) / (1.0L - alpha));
}

}  // namespace oracle
