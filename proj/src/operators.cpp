#include "abfrac/operators.hpp"

#include <cmath>
#include <sstream>

#include "abfrac/errors.hpp"
#include "abfrac/special_fn.hpp"

namespace abfrac {

namespace {

void require_integral_order(const OperatorPoint& pt, const char* op) {
  if (!pt.order().valid_for_integral()) {
    std::ostringstream os;
    os << op << ": alpha must be in (0, 1] (got " << pt.alpha() << ")";
    throw DomainError(os.str());
  }
}

void require_derivative_order(const OperatorPoint& pt, const char* op) {
  if (!pt.order().valid_for_derivative()) {
    std::ostringstream os;
    os << op << ": alpha must be in (0, 1) (got " << pt.alpha() << ")";
    throw DomainError(os.str());
  }
}

// E_a(-a s^a / (1 - a)) for s >= 0.
double ml_kernel(double alpha, double s) {
  if (s <= 0.0) return 1.0;
  return mittag_leffler(alpha, -alpha * std::pow(s, alpha) / (1.0 - alpha));
}

}  // namespace

double Normalization::operator()(double alpha) const {
  switch (kind_) {
    case Kind::Unit:
      return 1.0;
    case Kind::ABStandard:
      if (alpha == 0.0) return 1.0;
      return 1.0 - alpha + alpha / gamma(alpha);
  }
  return 1.0;
}

OperatorPoint::OperatorPoint(const TestFunction& f, double a, double b, double tau, FractionalOrder order,
                             Normalization norm, quad::QuadSpec quad)
    : f_(&f), a_(a), b_(b), tau_(tau), order_(order), norm_(norm), quad_(quad) {
  if (!(a < b)) {
    std::ostringstream os;
    os << "OperatorPoint: requires a < b (got a=" << a << ", b=" << b << ")";
    throw DomainError(os.str());
  }
  if (!(a <= tau && tau <= b)) {
    std::ostringstream os;
    os << "OperatorPoint: requires tau in [a, b] (got tau=" << tau << " on [" << a << ", " << b << "])";
    throw DomainError(os.str());
  }
}

double rl_integral_left(const OperatorPoint& pt) {
  require_integral_order(pt, "rl_integral_left");
  if (pt.tau() == pt.a()) return 0.0;
  const auto& fn = pt.f();
  const double integral = quad::integrate_singular([&fn](double y) { return fn.f(y); }, pt.a(), pt.tau(),
                                                   quad::SingularKernel::right_power(pt.alpha()), pt.alpha(),
                                                   pt.quad());
  return integral / gamma(pt.alpha());
}

double rl_integral_right(const OperatorPoint& pt) {
  require_integral_order(pt, "rl_integral_right");
  if (pt.tau() == pt.b()) return 0.0;
  const auto& fn = pt.f();
  const double integral = quad::integrate_singular([&fn](double y) { return fn.f(y); }, pt.tau(), pt.b(),
                                                   quad::SingularKernel::left_power(pt.alpha()), pt.alpha(),
                                                   pt.quad());
  return integral / gamma(pt.alpha());
}

double ab_integral_left(const OperatorPoint& pt) {
  require_integral_order(pt, "ab_integral_left");
  const double alpha = pt.alpha();
  const double b_alpha = pt.norm()(alpha);
  return (1.0 - alpha) / b_alpha * pt.f().f(pt.tau()) + alpha / b_alpha * rl_integral_left(pt);
}

double ab_integral_right(const OperatorPoint& pt) {
  require_integral_order(pt, "ab_integral_right");
  const double alpha = pt.alpha();
  const double b_alpha = pt.norm()(alpha);
  return (1.0 - alpha) / b_alpha * pt.f().f(pt.tau()) + alpha / b_alpha * rl_integral_right(pt);
}

double cf_integral_left(const OperatorPoint& pt) {
  require_integral_order(pt, "cf_integral_left");
  const double alpha = pt.alpha();
  const double b_alpha = pt.norm()(alpha);
  const auto& fn = pt.f();
  const double integral =
      pt.tau() == pt.a() ? 0.0 : quad::integrate([&fn](double y) { return fn.f(y); }, pt.a(), pt.tau(), pt.quad());
  return (1.0 - alpha) / b_alpha * fn.f(pt.tau()) + alpha / b_alpha * integral;
}

double cf_integral_right(const OperatorPoint& pt) {
  require_integral_order(pt, "cf_integral_right");
  const double alpha = pt.alpha();
  const double b_alpha = pt.norm()(alpha);
  const auto& fn = pt.f();
  const double integral =
      pt.tau() == pt.b() ? 0.0 : quad::integrate([&fn](double y) { return fn.f(y); }, pt.tau(), pt.b(), pt.quad());
  return (1.0 - alpha) / b_alpha * fn.f(pt.tau()) + alpha / b_alpha * integral;
}

double abc_derivative(const OperatorPoint& pt) {
  require_derivative_order(pt, "abc_derivative");
  const double alpha = pt.alpha();
  const double tau = pt.tau();
  if (tau == pt.a()) return 0.0;
  const auto& fn = pt.f();
  auto integrand = [&fn, alpha, tau](double x) {
    const double slope = fn.fprime(x);
    if (slope == 0.0) return 0.0;
    return slope * ml_kernel(alpha, tau - x);
  };
  const double integral = quad::integrate(integrand, pt.a(), tau, pt.quad());
  return pt.norm()(alpha) / (1.0 - alpha) * integral;
}

double abr_step(double tau) { return std::max(1e-5, 1e-5 * std::abs(tau)); }

double abr_inner_integral(const TestFunction& f, double a, double tau, double alpha, const quad::QuadSpec& quad) {
  if (tau == a) return 0.0;
  auto integrand = [&f, alpha, tau](double x) { return f.f(x) * ml_kernel(alpha, tau - x); };
  return quad::integrate(integrand, a, tau, quad);
}

double abr_derivative(const OperatorPoint& pt) {
  require_derivative_order(pt, "abr_derivative");
  const double alpha = pt.alpha();
  const double tau = pt.tau();
  const double h = abr_step(tau);
  if (!(tau - 2.0 * h > pt.a() && tau + 2.0 * h <= pt.b())) {
    std::ostringstream os;
    os << "abr_derivative: tau=" << tau << " too close to the ends of [" << pt.a() << ", " << pt.b()
       << "] for the finite-difference stencil (needs a < tau - 2h, tau + 2h <= b, h=" << h << ")";
    throw DomainError(os.str());
  }
  // With x = a + (t - a) s the kernel cusp sits at s = 1 for every t. One
  // partition, adapted at tau, serves all four stencil points so that the
  // quadrature error varies smoothly across the stencil.
  const auto& fn = pt.f();
  const double a = pt.a();
  auto mapped = [&fn, a, alpha](double t) {
    return [&fn, a, alpha, t](double s) {
      const double len = t - a;
      return len * fn.f(a + len * s) * ml_kernel(alpha, len * (1.0 - s));
    };
  };
  // The difference quotient divides quadrature error by h; resolve the inner
  // integral 100 times tighter than requested.
  quad::QuadSpec spec = pt.quad();
  spec.rel_tol *= 1e-2;
  spec.abs_tol *= 1e-2;
  const auto breaks = quad::integrate_detailed(mapped(tau), 0.0, 1.0, spec).breaks;
  auto inner = [&](double t) { return quad::integrate_on_partition(mapped(t), breaks, spec); };
  const double derivative =
      (-inner(tau + 2.0 * h) + 8.0 * inner(tau + h) - 8.0 * inner(tau - h) + inner(tau - 2.0 * h)) / (12.0 * h);
  return pt.norm()(alpha) / (1.0 - alpha) * derivative;
}

double cf_derivative(const OperatorPoint& pt) {
  require_derivative_order(pt, "cf_derivative");
  const double alpha = pt.alpha();
  const double tau = pt.tau();
  if (tau == pt.a()) return 0.0;
  const double rate = alpha / (1.0 - alpha);
  const auto& fn = pt.f();
  auto integrand = [&fn, rate, tau](double s) { return fn.fprime(s) * std::exp(-rate * (tau - s)); };
  const double integral = quad::integrate(integrand, pt.a(), tau, pt.quad());
  return pt.norm()(alpha) / (1.0 - alpha) * integral;
}

}  // namespace abfrac
