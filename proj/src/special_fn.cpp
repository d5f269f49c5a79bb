#include "abfrac/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "abfrac/errors.hpp"
#include "abfrac/quadrature.hpp"

namespace abfrac {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Accept an asymptotic or series result only when its error indicator is
// below this fraction of the value.
constexpr double kAcceptRel = 1e-13;

// sin(pi y) with y reduced to [-1, 1] first so integer y gives exactly 0.
double sin_pi(double y) {
  const double r = std::remainder(y, 2.0);
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  return std::sin(std::numbers::pi * r);
}

// 1/Gamma(1 - y) for y > 0 via reflection: Gamma(y) sin(pi y) / pi, carried
// in log form together with the term's power of |z|.
double asymptotic_term_magnitude(double alpha, int k, double log_abs_z, double& sign) {
  const double y = alpha * k;
  const double s = sin_pi(y);
  if (s == 0.0) {
    sign = 0.0;
    return 0.0;
  }
  int lg_sign = 1;
  const double lg = ::lgamma_r(y, &lg_sign);
  sign = (s > 0 ? 1.0 : -1.0) * lg_sign;
  return std::exp(lg - k * log_abs_z) * std::abs(s) / std::numbers::pi;
}

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

void MLParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("mittag_leffler: alpha must be in (0, 1]");
  if (!(series_tol > 0.0)) throw DomainError("mittag_leffler: series_tol must be > 0");
  if (max_terms < 10) throw DomainError("mittag_leffler: max_terms must be >= 10");
}

double gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "gamma: argument must be > 0 (got " << x << ")";
    throw DomainError(os.str());
  }
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be > 0");
  int sign = 1;
  return ::lgamma_r(x, &sign);
}

namespace ml_detail {

SeriesResult power_series(const MLParams& params, double z) {
  if (z == 0.0) return {1.0, 1.0, true};
  const double log_abs_z = std::log(std::abs(z));
  const bool negative = z < 0.0;
  Neumaier sum;
  double abs_sum = 0.0;
  sum.add(1.0);
  abs_sum += 1.0;
  // Consecutive small terms required before stopping; with alpha small the
  // magnitudes can plateau before they fall.
  int small_run = 0;
  for (int k = 1; k < params.max_terms; ++k) {
    const double log_mag = k * log_abs_z - log_gamma(params.alpha * k + 1.0);
    const double mag = std::exp(log_mag);
    if (!std::isfinite(mag)) return {sum.value(), std::numeric_limits<double>::infinity(), false};
    const double term = (negative && (k % 2 == 1)) ? -mag : mag;
    sum.add(term);
    abs_sum += mag;
    // Terms decrease monotonically once k * alpha exceeds |z|^{1/alpha}-ish;
    // require the decreasing phase before trusting a small term.
    const double next_log_mag = (k + 1) * log_abs_z - log_gamma(params.alpha * (k + 1) + 1.0);
    const bool decreasing = next_log_mag < log_mag;
    if (decreasing && mag <= params.series_tol * std::abs(sum.value())) {
      if (++small_run >= 2) return {sum.value(), abs_sum, true};
    } else {
      small_run = 0;
    }
  }
  return {sum.value(), abs_sum, false};
}

AsymptoticResult asymptotic_negative(const MLParams& params, double z) {
  if (!(z < 0.0)) throw DomainError("asymptotic_negative: z must be negative");
  const double log_abs_z = std::log(-z);
  Neumaier sum;
  double prev_mag = std::numeric_limits<double>::infinity();
  double smallest = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 100000; ++k) {
    double sign = 0.0;
    const double mag = asymptotic_term_magnitude(params.alpha, k, log_abs_z, sign);
    if (sign == 0.0) continue;  // 1/Gamma at a pole: term vanishes exactly
    if (mag > prev_mag) break;
    // term_k = -z^{-k} / Gamma(1 - alpha k); z^{-k} has sign (-1)^k.
    const double zk_sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum.add(-zk_sign * sign * mag);
    prev_mag = mag;
    smallest = mag;
    if (mag < 1e-300) break;
  }
  return {sum.value(), smallest};
}

double integral_representation(double alpha, double x) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("integral_representation: alpha must be in (0, 1)");
  if (!(x >= 0.0)) throw DomainError("integral_representation: x must be >= 0");
  const double c = std::cos(alpha * std::numbers::pi);
  const double sn = std::sin(alpha * std::numbers::pi);
  const double inv_alpha = 1.0 / alpha;
  quad::QuadSpec spec;
  spec.rel_tol = 5e-14;
  spec.abs_tol = 1e-300;
  spec.max_depth = 60;
  // s^2 + 2 s c + 1 written as (s + c)^2 + sin^2 keeps the near-pole at
  // s = -c free of cancellation when alpha is close to 1.
  // s in [0, 1]
  auto near = [&](double s) { return std::exp(-std::pow(x * s, inv_alpha)) / ((s + c) * (s + c) + sn * sn); };
  // s = 1/v, v in [0, 1]; ds/s^2 folds into the denominator
  auto far = [&](double v) { return std::exp(-std::pow(x / v, inv_alpha)) / ((v + c) * (v + c) + sn * sn); };
  const double total = quad::integrate(near, 0.0, 1.0, spec) + quad::integrate(far, 0.0, 1.0, spec);
  return sn / (alpha * std::numbers::pi) * total;
}

}  // namespace ml_detail

double mittag_leffler(const MLParams& params, double z) {
  params.validate();
  if (std::isnan(z)) return z;
  if (params.alpha == 1.0) return std::exp(z);
  if (z == 0.0) return 1.0;

  if (z < 0.0) {
    const auto series = ml_detail::power_series(params, z);
    if (series.converged && series.abs_sum * kEps <= kAcceptRel * std::abs(series.value)) {
      return series.value;
    }
    if (-z > params.asymptotic_threshold) {
      const auto asym = ml_detail::asymptotic_negative(params, z);
      if (asym.smallest_term <= kAcceptRel * std::abs(asym.value)) return asym.value;
    }
    return ml_detail::integral_representation(params.alpha, -z);
  }

  const auto series = ml_detail::power_series(params, z);
  if (series.converged) return series.value;
  // Large positive z: E_a(z) ~ (1/a) exp(z^{1/a}) - sum_k z^{-k}/Gamma(1 - a k).
  const double log_abs_z = std::log(z);
  Neumaier algebraic;
  double prev_mag = std::numeric_limits<double>::infinity();
  double smallest = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 100000; ++k) {
    double sign = 0.0;
    const double mag = asymptotic_term_magnitude(params.alpha, k, log_abs_z, sign);
    if (sign == 0.0) continue;
    if (mag > prev_mag) break;
    algebraic.add(-sign * mag);
    prev_mag = mag;
    smallest = mag;
    if (mag < 1e-300) break;
  }
  const double dominant = std::exp(std::pow(z, 1.0 / params.alpha)) / params.alpha;
  const double value = dominant + algebraic.value();
  if (std::isfinite(value) && smallest > kAcceptRel * std::abs(value)) {
    std::ostringstream os;
    os << "mittag_leffler: no regime converged for alpha=" << params.alpha << ", z=" << z;
    throw ConvergenceError(os.str());
  }
  return value;
}

double mittag_leffler(double alpha, double z) {
  MLParams params;
  params.alpha = alpha;
  return mittag_leffler(params, z);
}

}  // namespace abfrac
