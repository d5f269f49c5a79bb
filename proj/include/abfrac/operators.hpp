#pragma once

#include "abfrac/corpus.hpp"
#include "abfrac/quadrature.hpp"

namespace abfrac {

/// Fractional order alpha. Integral operators accept (0, 1]; derivative
/// operators need (0, 1) because of their 1/(1 - alpha) prefactor.
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha) : alpha_(alpha) {}

  double value() const { return alpha_; }
  bool valid_for_integral() const { return alpha_ > 0.0 && alpha_ <= 1.0; }
  bool valid_for_derivative() const { return alpha_ > 0.0 && alpha_ < 1.0; }

 private:
  double alpha_;
};

/// The normalization function B(alpha) (written M(alpha) for Caputo-Fabrizio).
class Normalization {
 public:
  enum class Kind { Unit, ABStandard };

  constexpr Normalization() = default;
  constexpr explicit Normalization(Kind kind) : kind_(kind) {}

  static constexpr Normalization unit() { return Normalization(Kind::Unit); }
  static constexpr Normalization ab_standard() { return Normalization(Kind::ABStandard); }

  Kind kind() const { return kind_; }

  /// Unit: 1. ABStandard: 1 - alpha + alpha / Gamma(alpha).
  double operator()(double alpha) const;

 private:
  Kind kind_ = Kind::Unit;
};

/// Everything an operator needs at one evaluation point. Holds a reference
/// to the function; the TestFunction must outlive the point.
class OperatorPoint {
 public:
  /// Throws DomainError unless a < b and tau in [a, b].
  OperatorPoint(const TestFunction& f, double a, double b, double tau, FractionalOrder order,
                Normalization norm = {}, quad::QuadSpec quad = {});

  const TestFunction& f() const { return *f_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double tau() const { return tau_; }
  double alpha() const { return order_.value(); }
  const FractionalOrder& order() const { return order_; }
  const Normalization& norm() const { return norm_; }
  const quad::QuadSpec& quad() const { return quad_; }

 private:
  const TestFunction* f_;
  double a_;
  double b_;
  double tau_;
  FractionalOrder order_;
  Normalization norm_;
  quad::QuadSpec quad_;
};

/// (1/Gamma(alpha)) int_a^tau f(y) (tau - y)^{alpha-1} dy.
double rl_integral_left(const OperatorPoint& pt);

/// (1/Gamma(alpha)) int_tau^b f(y) (y - tau)^{alpha-1} dy.
double rl_integral_right(const OperatorPoint& pt);

/// Atangana-Baleanu integrals:
///   left:  (1-a)/B f(tau) + a/(B Gamma(a)) int_a^tau f(y)(tau-y)^{a-1} dy
///   right: (1-a)/B f(tau) + a/(B Gamma(a)) int_tau^b f(y)(y-tau)^{a-1} dy
double ab_integral_left(const OperatorPoint& pt);
double ab_integral_right(const OperatorPoint& pt);

/// Caputo-Fabrizio integrals: (1-a)/B f(tau) + a/B int f over [a, tau]
/// (left) or [tau, b] (right).
double cf_integral_left(const OperatorPoint& pt);
double cf_integral_right(const OperatorPoint& pt);

/// Atangana-Baleanu derivative in the Caputo sense:
///   B/(1-a) int_a^tau f'(x) E_a(-a (tau-x)^a / (1-a)) dx.
double abc_derivative(const OperatorPoint& pt);

/// Atangana-Baleanu derivative in the Riemann-Liouville sense,
///   B/(1-a) d/dtau int_a^tau f(x) E_a(-a (tau-x)^a / (1-a)) dx,
/// with the outer derivative taken by a 5-point central difference of step
/// max(1e-5, 1e-5 |tau|). The four stencil integrals share one quadrature
/// partition. The stencil must fit inside [a, b].
double abr_derivative(const OperatorPoint& pt);

/// ABR step size used at tau.
double abr_step(double tau);

/// The ML-kernel integral under the ABR derivative, without prefactor.
double abr_inner_integral(const TestFunction& f, double a, double tau, double alpha, const quad::QuadSpec& quad);

/// Caputo-Fabrizio derivative: M/(1-a) int_a^tau f'(s) exp(-a (tau-s)/(1-a)) ds.
double cf_derivative(const OperatorPoint& pt);

}  // namespace abfrac
