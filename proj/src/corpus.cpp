#include "abfrac/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "abfrac/errors.hpp"

namespace abfrac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_range(const QFlag& flag, double q) { return flag.q_lo <= q && q <= flag.q_hi; }

std::vector<TestFunction> make_builtins() {
  std::vector<TestFunction> out;
  const std::vector<Interval> standard = default_intervals();

  {
    TestFunction t;
    t.name = "constant";
    t.formula = "f(x) = 2";
    t.eval_f = [](double) { return 2.0; };
    t.eval_fprime = [](double) { return 0.0; };
    t.flags = {true, true, true, true};
    t.q_flags = {{1.0, kInf, PowerShape::Convex, "|f'|^q = 0"},
                 {1.0, kInf, PowerShape::Concave, "|f'|^q = 0"}};
    t.justifications = {"f convex and concave: affine", "|f'| convex and concave: identically 0"};
    t.grid_intervals = standard;
    out.push_back(std::move(t));
  }
  {
    TestFunction t;
    t.name = "linear";
    t.formula = "f(x) = 3x + 1";
    t.eval_f = [](double x) { return 3.0 * x + 1.0; };
    t.eval_fprime = [](double) { return 3.0; };
    t.flags = {true, true, true, true};
    t.q_flags = {{1.0, kInf, PowerShape::Convex, "|f'|^q = 3^q is constant"},
                 {1.0, kInf, PowerShape::Concave, "|f'|^q = 3^q is constant"}};
    t.justifications = {"f convex and concave: affine", "|f'| convex and concave: constant 3"};
    t.grid_intervals = standard;
    out.push_back(std::move(t));
  }
  {
    TestFunction t;
    t.name = "quadratic";
    t.formula = "f(x) = x^2";
    t.eval_f = [](double x) { return x * x; };
    t.eval_fprime = [](double x) { return 2.0 * x; };
    t.flags = {true, false, true, false};
    t.q_flags = {{1.0, kInf, PowerShape::Convex, "|2x|^q: convex power (q >= 1) of a convex nonnegative function"}};
    t.justifications = {"f convex: f'' = 2 > 0", "|f'| convex: |2x| is the absolute value of a linear map"};
    t.grid_intervals = standard;
    out.push_back(std::move(t));
  }
  {
    TestFunction t;
    t.name = "quartic";
    t.formula = "f(x) = x^4";
    t.eval_f = [](double x) { return x * x * x * x; };
    t.eval_fprime = [](double x) { return 4.0 * x * x * x; };
    t.flags = {true, false, true, false};
    t.q_flags = {{1.0, kInf, PowerShape::Convex, "|4x^3|^q = 4^q |x|^{3q}, exponent 3q >= 1"}};
    t.justifications = {"f convex: f'' = 12x^2 >= 0", "|f'| convex: 4|x|^3 has nonnegative second derivative 24|x|"};
    t.grid_intervals = standard;
    out.push_back(std::move(t));
  }
  {
    TestFunction t;
    t.name = "exp";
    t.formula = "f(x) = e^x";
    t.eval_f = [](double x) { return std::exp(x); };
    t.eval_fprime = [](double x) { return std::exp(x); };
    t.flags = {true, false, true, false};
    t.q_flags = {{1.0, kInf, PowerShape::Convex, "|f'|^q = e^{qx} is convex"}};
    t.justifications = {"f convex: f'' = e^x > 0", "|f'| convex: |f'| = e^x"};
    t.grid_intervals = standard;
    out.push_back(std::move(t));
  }
  {
    // On [0.5, 2] f' = ln x + 1 lies in [1 - ln 2, 1 + ln 2] > 0.
    // (ln x + 1)^q has second derivative
    //   q (ln x + 1)^{q-2} x^{-2} [(q - 1) - (ln x + 1)],
    // so it is convex on the domain iff q - 1 >= 1 + ln 2.
    TestFunction t;
    t.name = "xlogx";
    t.formula = "f(x) = x ln x on [0.5, 2]";
    t.eval_f = [](double x) { return x * std::log(x); };
    t.eval_fprime = [](double x) { return std::log(x) + 1.0; };
    t.domain = {0.5, 2.0};
    t.flags = {true, false, false, true};
    t.q_flags = {{2.0 + std::numbers::ln2, kInf, PowerShape::Convex,
                  "(ln x + 1)^q convex iff q - 1 >= max(ln x + 1) = 1 + ln 2"}};
    t.justifications = {"f convex: f'' = 1/x > 0",
                        "|f'| concave: ln x + 1 > 0 on the domain and ln is concave"};
    t.grid_intervals = {{0.5, 1.0}, {0.5, 2.0}, {1.0, 2.0}};
    out.push_back(std::move(t));
  }
  {
    constexpr double eps = 0.01;
    TestFunction t;
    t.name = "sqrt_deriv";
    t.formula = "f(x) = (2/3)(x + 0.01)^{3/2}, f'(x) = sqrt(x + 0.01), x >= 0";
    t.eval_f = [](double x) { return (2.0 / 3.0) * std::pow(x + eps, 1.5); };
    t.eval_fprime = [](double x) { return std::sqrt(x + eps); };
    t.domain = {0.0, kInf};
    t.flags = {true, false, false, true};
    t.q_flags = {{1.0, 2.0, PowerShape::Concave, "|f'|^q = (x + 0.01)^{q/2}, exponent q/2 <= 1"},
                 {2.0, kInf, PowerShape::Convex, "|f'|^q = (x + 0.01)^{q/2}, exponent q/2 >= 1"}};
    t.justifications = {"f convex: f'' = 1/(2 sqrt(x + 0.01)) > 0", "|f'| concave: square root is concave"};
    t.grid_intervals = {{0.0, 1.0}, {0.01, 1.0}, {2.0, 5.0}};
    out.push_back(std::move(t));
  }
  {
    TestFunction t;
    t.name = "sine";
    t.formula = "f(x) = sin x on [0, pi/2]";
    t.eval_f = [](double x) { return std::sin(x); };
    t.eval_fprime = [](double x) { return std::cos(x); };
    t.domain = {0.0, std::numbers::pi / 2.0};
    t.flags = {false, true, false, true};
    t.justifications = {"f concave: f'' = -sin x <= 0 on [0, pi/2]",
                        "|f'| concave: |f'| = cos x with (cos x)'' = -cos x <= 0 on [0, pi/2]"};
    t.grid_intervals = {{0.0, 1.0}, {0.25, 1.25}, {0.0, std::numbers::pi / 2.0}};
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

bool TestFunction::abs_fprime_pow_convex(double q) const {
  if (q == 1.0 && flags.abs_fprime_convex) return true;
  return std::any_of(q_flags.begin(), q_flags.end(),
                     [q](const QFlag& f) { return f.shape == PowerShape::Convex && in_range(f, q); });
}

bool TestFunction::abs_fprime_pow_concave(double q) const {
  if (q == 1.0 && flags.abs_fprime_concave) return true;
  return std::any_of(q_flags.begin(), q_flags.end(),
                     [q](const QFlag& f) { return f.shape == PowerShape::Concave && in_range(f, q); });
}

std::vector<Interval> default_intervals() { return {{0.0, 1.0}, {-1.0, 2.0}, {2.0, 5.0}}; }

const std::vector<TestFunction>& builtins() {
  static const std::vector<TestFunction> registry = make_builtins();
  return registry;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& fn : builtins()) names.push_back(fn.name);
  return names;
}

const TestFunction& lookup(const std::string& name) {
  for (const auto& fn : builtins()) {
    if (fn.name == name) return fn;
  }
  std::ostringstream os;
  os << "unknown function '" << name << "'; available:";
  for (const auto& n : builtin_names()) os << ' ' << n;
  throw ConfigError(os.str());
}

TestFunction shifted(const TestFunction& fn, double c) {
  TestFunction t;
  t.name = fn.name + "_shifted";
  t.formula = fn.formula + " shifted";
  t.eval_f = [f = fn.eval_f, c](double x) { return f(x - c); };
  t.eval_fprime = [fp = fn.eval_fprime, c](double x) { return fp(x - c); };
  t.domain = {fn.domain.lo + c, fn.domain.hi + c};
  t.flags = fn.flags;
  t.q_flags = fn.q_flags;
  return t;
}

TestFunction reflected(const TestFunction& fn, double a, double b) {
  const double s = a + b;
  TestFunction t;
  t.name = fn.name + "_reflected";
  t.formula = fn.formula + " reflected";
  t.eval_f = [f = fn.eval_f, s](double x) { return f(s - x); };
  t.eval_fprime = [fp = fn.eval_fprime, s](double x) { return -fp(s - x); };
  t.domain = {s - fn.domain.hi, s - fn.domain.lo};
  t.flags = fn.flags;
  t.q_flags = fn.q_flags;
  return t;
}

TestFunction scaled(const TestFunction& fn, double c) {
  TestFunction t;
  t.name = fn.name + "_scaled";
  t.formula = fn.formula + " scaled";
  t.eval_f = [f = fn.eval_f, c](double x) { return c * f(x); };
  t.eval_fprime = [fp = fn.eval_fprime, c](double x) { return c * fp(x); };
  t.domain = fn.domain;
  if (c > 0.0) {
    t.flags = fn.flags;
    t.q_flags = fn.q_flags;
  }
  t.grid_intervals = fn.grid_intervals;
  return t;
}

TestFunction combination(double c1, const TestFunction& f1, double c2, const TestFunction& f2) {
  TestFunction t;
  t.name = f1.name + "+" + f2.name;
  t.formula = "linear combination";
  t.eval_f = [g = f1.eval_f, h = f2.eval_f, c1, c2](double x) { return c1 * g(x) + c2 * h(x); };
  t.eval_fprime = [g = f1.eval_fprime, h = f2.eval_fprime, c1, c2](double x) {
    return c1 * g(x) + c2 * h(x);
  };
  t.domain = {std::max(f1.domain.lo, f2.domain.lo), std::min(f1.domain.hi, f2.domain.hi)};
  return t;
}

DerivativeCheck derivative_self_test(const TestFunction& fn, const Interval& on, int points, unsigned seed,
                                     double tol) {
  std::mt19937_64 rng(seed);
  const double width = on.hi - on.lo;
  std::uniform_real_distribution<double> dist(on.lo + 0.01 * width, on.hi - 0.01 * width);
  DerivativeCheck check;
  check.passed = true;
  for (int i = 0; i < points; ++i) {
    const double x = dist(rng);
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    const double fd = (fn.f(x + h) - fn.f(x - h)) / (2.0 * h);
    const double exact = fn.fprime(x);
    const double rel = std::abs(fd - exact) / std::max(1.0, std::abs(exact));
    if (rel > check.max_rel_error) {
      check.max_rel_error = rel;
      check.worst_x = x;
    }
  }
  check.passed = check.max_rel_error <= tol;
  return check;
}

}  // namespace abfrac
