#include "abfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <sstream>

#include "abfrac/errors.hpp"

namespace abfrac::quad {

void QuadSpec::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadSpec: rel_tol must be > 0");
  if (!(abs_tol > 0.0)) throw DomainError("QuadSpec: abs_tol must be > 0");
  if (max_depth < 4) throw DomainError("QuadSpec: max_depth must be >= 4");
  if (nodes_per_panel < 5) throw DomainError("QuadSpec: nodes_per_panel must be >= 5");
}

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Final derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  double mass;  // fine-rule estimate of int |g|
  int depth;
};

// Worst error first; ties resolved by position so the refinement order does
// not depend on heap internals.
struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.lo > y.lo;
  }
};

struct RuleSum {
  double value;
  double mass;
};

RuleSum apply_rule(const GaussRule& rule, const Integrand& g, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double term = rule.weights[i] * g(mid + half * rule.nodes[i]);
    sum += term;
    mass += std::abs(term);
  }
  return {half * sum, half * mass};
}

// Requests below this multiple of eps * int |g| are limited by rounding in
// the rule sums, not by resolution.
constexpr double kRoundoffFactor = 50.0 * std::numeric_limits<double>::epsilon();

// Neumaier-compensated sum of panel values in left-to-right order.
double ordered_sum(std::vector<Panel>& panels) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  double sum = 0.0;
  double comp = 0.0;
  for (const auto& p : panels) {
    const double t = sum + p.value;
    if (std::abs(sum) >= std::abs(p.value)) {
      comp += (sum - t) + p.value;
    } else {
      comp += (p.value - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  thread_local std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

QuadResult integrate_detailed(const Integrand& g, double c, double d, const QuadSpec& spec) {
  spec.validate();
  if (!(c < d)) {
    std::ostringstream os;
    os << "integrate: requires c < d (got c=" << c << ", d=" << d << ")";
    throw DomainError(os.str());
  }
  const GaussRule& coarse = gauss_legendre(spec.nodes_per_panel);
  const GaussRule& fine = gauss_legendre(2 * spec.nodes_per_panel + 1);
  const int evals_per_panel = 3 * spec.nodes_per_panel + 1;

  QuadResult result;
  auto make_panel = [&](double lo, double hi, int depth) {
    const RuleSum q_fine = apply_rule(fine, g, lo, hi);
    const RuleSum q_coarse = apply_rule(coarse, g, lo, hi);
    result.evaluations += evals_per_panel;
    return Panel{lo, hi, q_fine.value, std::abs(q_fine.value - q_coarse.value), q_fine.mass, depth};
  };

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> work;
  Panel first = make_panel(c, d, 0);
  double total_value = first.value;
  double total_error = first.error;
  double total_mass = first.mass;
  work.push(first);

  // Bound on panel count: a full binary refinement to max_depth along a few
  // paths is far below this; runaway refinement indicates a non-integrable
  // or non-finite integrand.
  constexpr int kMaxPanels = 200000;

  while (true) {
    const double tol =
        std::max({spec.abs_tol, spec.rel_tol * std::abs(total_value), kRoundoffFactor * total_mass});
    if (!std::isfinite(total_value)) {
      throw ToleranceNotMet("integrate: non-finite integrand value", total_error, tol);
    }
    if (total_error <= tol) break;
    Panel worst = work.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (worst.depth >= spec.max_depth || !(worst.lo < mid && mid < worst.hi) ||
        static_cast<int>(work.size()) >= kMaxPanels) {
      std::ostringstream os;
      os << "integrate: tolerance not met on [" << c << ", " << d << "] (estimate " << total_error
         << " > " << tol << " at depth " << worst.depth << ")";
      throw ToleranceNotMet(os.str(), total_error, tol);
    }
    work.pop();
    Panel left = make_panel(worst.lo, mid, worst.depth + 1);
    Panel right = make_panel(mid, worst.hi, worst.depth + 1);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    total_mass += left.mass + right.mass - worst.mass;
    work.push(left);
    work.push(right);
  }

  std::vector<Panel> panels;
  panels.reserve(work.size());
  double error = 0.0;
  while (!work.empty()) {
    error += work.top().error;
    panels.push_back(work.top());
    work.pop();
  }
  result.panels = static_cast<int>(panels.size());
  result.error = error;
  result.value = ordered_sum(panels);
  result.breaks.reserve(panels.size() + 1);
  for (const auto& p : panels) result.breaks.push_back(p.lo);
  result.breaks.push_back(d);
  return result;
}

double integrate_on_partition(const Integrand& g, const std::vector<double>& breaks, const QuadSpec& spec) {
  spec.validate();
  if (breaks.size() < 2) throw DomainError("integrate_on_partition: needs at least two breaks");
  const GaussRule& fine = gauss_legendre(2 * spec.nodes_per_panel + 1);
  std::vector<Panel> panels;
  panels.reserve(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) throw DomainError("integrate_on_partition: breaks must be increasing");
    const RuleSum q = apply_rule(fine, g, breaks[i], breaks[i + 1]);
    panels.push_back(Panel{breaks[i], breaks[i + 1], q.value, 0.0, q.mass, 0});
  }
  return ordered_sum(panels);
}

double integrate(const Integrand& g, double c, double d, const QuadSpec& spec) {
  return integrate_detailed(g, c, d, spec).value;
}

double integrate_singular(const Integrand& g, double c, double d, SingularKernel kernel,
                          double alpha, const QuadSpec& spec) {
  if (!(alpha > 0.0)) throw DomainError("integrate_singular: alpha must be > 0");
  if (!(kernel.exponent > -1.0)) throw DomainError("integrate_singular: kernel exponent must be > -1");
  switch (kernel.kind) {
    case KernelKind::None:
      return integrate(g, c, d, spec);
    case KernelKind::LeftPower:
    case KernelKind::RightPower:
      break;
  }
  if (std::abs(kernel.exponent - (alpha - 1.0)) > 1e-14) {
    throw DomainError("integrate_singular: kernel exponent must equal alpha - 1");
  }
  if (!(c < d)) throw DomainError("integrate_singular: requires c < d");
  if (alpha == 1.0) return integrate(g, c, d, spec);

  const double inv_alpha = 1.0 / alpha;
  const double upper = std::pow(d - c, alpha);
  Integrand transformed;
  if (kernel.kind == KernelKind::LeftPower) {
    transformed = [&g, c, inv_alpha](double u) { return g(c + std::pow(u, inv_alpha)); };
  } else {
    transformed = [&g, d, inv_alpha](double u) { return g(d - std::pow(u, inv_alpha)); };
  }
  return inv_alpha * integrate(transformed, 0.0, upper, spec);
}

}  // namespace abfrac::quad
