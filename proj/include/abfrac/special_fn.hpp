#pragma once

namespace abfrac {

/// Controls for the one-parameter Mittag-Leffler evaluator.
struct MLParams {
  double alpha = 0.5;
  double series_tol = 1e-16;
  int max_terms = 500;
  double asymptotic_threshold = 10.0;

  /// Throws DomainError unless 0 < alpha <= 1, series_tol > 0, max_terms >= 10.
  void validate() const;
};

/// Gamma function for x > 0.
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// E_alpha(z) = sum_k z^k / Gamma(alpha k + 1).
///
/// alpha = 1 returns exp(z). For z < 0 the power series is used while its
/// cancellation is harmless, the asymptotic expansion beyond
/// -asymptotic_threshold when its smallest term is negligible, and the
/// integral representation
///   E_a(-x) = sin(a pi)/(a pi) * int_0^inf exp(-(x s)^{1/a}) / (s^2 + 2 s cos(a pi) + 1) ds
/// everywhere else. Positive z uses the series, or the exponential
/// asymptotic form when the series needs more than max_terms.
double mittag_leffler(double alpha, double z);
double mittag_leffler(const MLParams& params, double z);

/// Individual regimes, exposed for cross-checking.
namespace ml_detail {

struct SeriesResult {
  double value;
  double abs_sum;  // sum of |term|; abs_sum * eps bounds the cancellation loss
  bool converged;
};

SeriesResult power_series(const MLParams& params, double z);

struct AsymptoticResult {
  double value;
  double smallest_term;  // magnitude of the term at which truncation stopped
};

/// -sum_{k>=1} z^{-k} / Gamma(1 - alpha k), truncated before the first term
/// that grows in magnitude. z must be negative.
AsymptoticResult asymptotic_negative(const MLParams& params, double z);

/// E_alpha(-x) for x >= 0 from the integral representation; 0 < alpha < 1.
double integral_representation(double alpha, double x);

}  // namespace ml_detail

}  // namespace abfrac
