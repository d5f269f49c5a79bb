#pragma once

#include <functional>
#include <span>
#include <vector>

namespace abfrac::quad {

using Integrand = std::function<double(double)>;

/// Tolerances and rule size for the adaptive engine.
struct QuadSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 40;
  int nodes_per_panel = 15;

  /// Throws DomainError unless rel_tol > 0, abs_tol > 0, max_depth >= 4
  /// and nodes_per_panel >= 5.
  void validate() const;
};

enum class KernelKind { None, LeftPower, RightPower };

/// Endpoint weight of a fractional integral. LeftPower is (x - c)^exponent,
/// RightPower is (d - x)^exponent, both on [c, d]; exponent = alpha - 1.
struct SingularKernel {
  KernelKind kind = KernelKind::None;
  double exponent = 0.0;

  static SingularKernel none() { return {}; }
  static SingularKernel left_power(double alpha) { return {KernelKind::LeftPower, alpha - 1.0}; }
  static SingularKernel right_power(double alpha) { return {KernelKind::RightPower, alpha - 1.0}; }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // sum of per-panel |Q_{2n+1} - Q_n|
  int panels = 0;
  int evaluations = 0;
  std::vector<double> breaks;  // final panel edges, ascending, from c to d
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per thread; the returned reference stays valid for the thread's
/// lifetime.
const GaussRule& gauss_legendre(int n);

/// Adaptive integral of g over [c, d]. Panels are bisected worst-first until
/// the summed error estimate is within max(abs_tol, rel_tol * |value|).
/// Only interior points are ever evaluated. Throws ToleranceNotMet when a
/// panel that needs refining is already at max_depth.
QuadResult integrate_detailed(const Integrand& g, double c, double d, const QuadSpec& spec = {});

double integrate(const Integrand& g, double c, double d, const QuadSpec& spec = {});

/// The (2n+1)-point rule of `spec` applied on each panel of a fixed
/// partition, for example QuadResult::breaks from an earlier adaptive run.
/// Nodes depend only on the partition, so the result is a smooth function of
/// any parameter the integrand depends on smoothly.
double integrate_on_partition(const Integrand& g, const std::vector<double>& breaks, const QuadSpec& spec = {});

/// int_c^d K(x) g(x) dx for the weakly singular kernel K of order alpha,
/// evaluated as (1/alpha) int_0^{(d-c)^alpha} g(c + u^{1/alpha}) du
/// (LeftPower) or the mirrored substitution (RightPower).
double integrate_singular(const Integrand& g, double c, double d, SingularKernel kernel,
                          double alpha, const QuadSpec& spec = {});

}  // namespace abfrac::quad
