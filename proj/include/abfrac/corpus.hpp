#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace abfrac {

struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Pointwise shape facts, each certified analytically on the whole domain.
struct ShapeFlags {
  bool f_convex = false;
  bool f_concave = false;
  bool abs_fprime_convex = false;
  bool abs_fprime_concave = false;
};

enum class PowerShape { Convex, Concave };

/// |f'|^q has the given shape for every q in [q_lo, q_hi].
struct QFlag {
  double q_lo;
  double q_hi;
  PowerShape shape;
  std::string why;
};

/// A closed-form test function with analytic derivative and shape metadata.
struct TestFunction {
  std::string name;
  std::string formula;
  std::function<double(double)> eval_f;
  std::function<double(double)> eval_fprime;
  Interval domain{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  ShapeFlags flags;
  std::vector<QFlag> q_flags;
  /// One line per claimed flag.
  std::vector<std::string> justifications;
  /// Intervals used by the default verification grid.
  std::vector<Interval> grid_intervals;

  double f(double x) const { return eval_f(x); }
  double fprime(double x) const { return eval_fprime(x); }

  /// |f'|^q convex (resp. concave). q = 1 falls back to the base flags.
  bool abs_fprime_pow_convex(double q) const;
  bool abs_fprime_pow_concave(double q) const;
};

/// The eight built-in entries: constant, linear, quadratic, quartic, exp,
/// xlogx, sqrt_deriv, sine.
const std::vector<TestFunction>& builtins();

/// Throws ConfigError listing the registered names when `name` is unknown.
const TestFunction& lookup(const std::string& name);

std::vector<std::string> builtin_names();

/// Default intervals of the verification grid for functions without a
/// domain restriction.
std::vector<Interval> default_intervals();

// Derived functions, used by symmetry and linearity checks. Metadata beyond
// the domain is not carried over.
TestFunction shifted(const TestFunction& fn, double c);                  // x -> f(x - c)
TestFunction reflected(const TestFunction& fn, double a, double b);      // x -> f(a + b - x)
TestFunction scaled(const TestFunction& fn, double c);                   // x -> c f(x), flags kept for c > 0
TestFunction combination(double c1, const TestFunction& f1, double c2, const TestFunction& f2);

struct DerivativeCheck {
  double max_rel_error = 0.0;
  double worst_x = 0.0;
  bool passed = false;
};

/// Compares eval_fprime with a central difference of eval_f at `points`
/// uniformly random interior points of `on`.
DerivativeCheck derivative_self_test(const TestFunction& fn, const Interval& on, int points = 64,
                                     unsigned seed = 12345, double tol = 1e-6);

}  // namespace abfrac
