#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "abfrac/corpus.hpp"

namespace fixture {

inline abfrac::TestFunction make_fn(std::string name, std::function<double(double)> f,
                                    std::function<double(double)> fp) {
  abfrac::TestFunction fn;
  fn.name = std::move(name);
  fn.formula = fn.name;
  fn.eval_f = std::move(f);
  fn.eval_fprime = std::move(fp);
  return fn;
}

inline abfrac::TestFunction monomial(int n) {
  return make_fn("x^" + std::to_string(n), [n](double x) { return std::pow(x, n); },
                 [n](double x) { return n == 0 ? 0.0 : n * std::pow(x, n - 1); });
}

inline abfrac::TestFunction constant(double c) {
  return make_fn("c", [c](double) { return c; }, [](double) { return 0.0; });
}

// An interval inside fn's domain for operator checks.
inline abfrac::Interval operator_interval(const abfrac::TestFunction& fn) { return fn.grid_intervals.front(); }

}  // namespace fixture
