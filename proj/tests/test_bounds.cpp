#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "abfrac/bounds.hpp"
#include "abfrac/errors.hpp"
#include "fixtures.hpp"

using namespace abfrac;

namespace {

BoundInstance make(const TestFunction& f, double a, double b, double alpha, Theorem t, double p = 2.0,
                   double q = 2.0) {
  BoundInstance inst;
  inst.f = &f;
  inst.a = a;
  inst.b = b;
  inst.alpha = alpha;
  inst.p = p;
  inst.q = q;
  inst.theorem = t;
  return inst;
}

const Theorem kFractional[] = {Theorem::ConvexAbs,     Theorem::Holder,       Theorem::PowerMean,
                               Theorem::Young,         Theorem::ConcaveJensen, Theorem::ConcaveHolder};

struct PQ {
  double p;
  double q;
};
const PQ kPairs[] = {{2.0, 2.0}, {3.0, 1.5}, {1.5, 3.0}};

}  // namespace

TEST_CASE("theorem names") {
  std::set<std::string> seen;
  for (Theorem t : all_theorems()) {
    const std::string name(theorem_name(t));
    CHECK(seen.insert(name).second);
    CHECK(parse_theorem(name) == t);
    CHECK(!hypothesis_text(t).empty());
  }
  CHECK(seen.size() == 8);
  CHECK_FALSE(parse_theorem("Nope").has_value());
  CHECK(uses_conjugate_pair(Theorem::Young));
  CHECK(uses_q_only(Theorem::PowerMean));
  CHECK(is_classical(Theorem::Bullen));
  CHECK_FALSE(is_classical(Theorem::ConvexAbs));
}

TEST_CASE("ConvexAbs examples") {
  const auto& q = lookup("quadratic");
  CHECK(rhs_convex_abs(make(q, 0, 1, 1.0, Theorem::ConvexAbs)) == doctest::Approx(2.0));
  CHECK(corollary_rhs(make(q, 0, 1, 1.0, Theorem::ConvexAbs)) == doctest::Approx(1.0));
  CHECK(corollary_lhs_abs(Theorem::ConvexAbs, q, 0, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  const auto& e = lookup("exp");
  CHECK(rhs_convex_abs(make(e, 0, 1, 0.5, Theorem::ConvexAbs)) ==
        doctest::Approx(2.0 * (1.0 + std::exp(1.0)) / 1.5).epsilon(1e-14));
  const auto& lin = lookup("linear");
  const auto rep = verify_bound(make(lin, 0, 1, 0.4, Theorem::ConvexAbs));
  CHECK(rep.rhs == doctest::Approx(4.0 * 3.0 / 1.4));
  CHECK(rep.lhs_abs < 1e-9);
  CHECK(rep.slack > 0.0);
}

TEST_CASE("Holder examples") {
  const auto& q = lookup("quadratic");
  CHECK(rhs_holder(make(q, 0, 1, 1.0, Theorem::Holder)) ==
        doctest::Approx(2.0 / std::sqrt(3.0) * (1.0 + std::sqrt(3.0))).epsilon(1e-14));
  const auto& lin = lookup("linear");
  for (const auto& pq : kPairs) {
    for (double alpha : {0.2, 0.7}) {
      const auto rep = verify_bound(make(lin, 0, 1, alpha, Theorem::Holder, pq.p, pq.q));
      CHECK(rep.rhs == doctest::Approx(4.0 * 3.0 / std::pow(alpha * pq.p + 1.0, 1.0 / pq.p)).epsilon(1e-14));
      CHECK(rep.status == BoundStatus::Holds);
    }
  }
  const auto& e = lookup("exp");
  const double fa = std::pow(1.0, 1.5);
  const double fb = std::pow(std::exp(1.0), 1.5);
  const double want = 2.0 / std::pow(0.5 * 3.0 + 1.0, 1.0 / 3.0) *
                      (std::pow((3.0 * fa + fb) / 4.0, 1.0 / 1.5) + std::pow((3.0 * fb + fa) / 4.0, 1.0 / 1.5));
  const auto rep = verify_bound(make(e, 0, 1, 0.5, Theorem::Holder, 3.0, 1.5));
  CHECK(rep.rhs == doctest::Approx(want).epsilon(1e-14));
  CHECK(rep.slack >= 0.0);
}

TEST_CASE("PowerMean examples") {
  const auto& q = lookup("quadratic");
  const double want =
      std::sqrt(0.5) * (std::sqrt(4.0 / 6.0) + std::sqrt(4.0 / 12.0) + std::sqrt(5.0 / 12.0 * 4.0) +
                        std::sqrt(4.0 / 12.0 * 4.0));
  CHECK(rhs_power_mean(make(q, 0, 1, 1.0, Theorem::PowerMean, 2.0, 2.0)) == doctest::Approx(want).epsilon(1e-14));
  const auto& lin = lookup("linear");
  CHECK(verify_bound(make(lin, 0, 1, 0.3, Theorem::PowerMean, 2.0, 3.0)).slack > 0.0);
}

TEST_CASE("PowerMean at q = 1 equals ConvexAbs") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> al(0.01, 1.0);
  for (const auto& f : builtins()) {
    if (!f.flags.abs_fprime_convex) continue;
    for (const auto& iv : f.grid_intervals) {
      for (int i = 0; i < 10; ++i) {
        const double alpha = al(rng);
        const double pm = rhs_power_mean(make(f, iv.lo, iv.hi, alpha, Theorem::PowerMean, 2.0, 1.0));
        const double ca = rhs_convex_abs(make(f, iv.lo, iv.hi, alpha, Theorem::ConvexAbs));
        INFO(f.name << " alpha=" << alpha);
        CHECK(std::abs(pm - ca) <= 1e-13 * std::max(1.0, ca));
      }
    }
  }
  // coefficient rows sum to 2/(alpha+1) per endpoint
  for (double alpha : {0.1, 0.5, 1.0}) {
    const double d12 = 2.0 * (alpha + 1.0) * (alpha + 2.0);
    const double sum = (alpha + 3.0) / d12 + 1.0 / (2.0 * (alpha + 2.0)) + (2.0 * alpha + 3.0) / d12 + 1.0 / d12;
    CHECK(std::abs(sum - 2.0 / (alpha + 1.0)) < 1e-15);
  }
}

TEST_CASE("Young examples") {
  const auto& q = lookup("quadratic");
  CHECK(rhs_young(make(q, 0, 1, 1.0, Theorem::Young)) == doctest::Approx(14.0 / 3.0).epsilon(1e-14));
  const auto zero = fixture::constant(0.0);
  auto zero_fn = lookup("constant");
  zero_fn.eval_f = [](double) { return 0.0; };
  const auto rep = verify_bound(make(zero_fn, 0, 1, 0.5, Theorem::Young, 3.0, 1.5));
  CHECK(rep.rhs == doctest::Approx(4.0 / (3.0 * 2.5)));
  CHECK(rep.lhs_abs == 0.0);
  for (const auto& pq : kPairs) {
    const auto inst = make(q, 0, 1, 1.0, Theorem::Young, pq.p, pq.q);
    const double fb = std::pow(2.0, pq.q);
    CHECK(corollary_rhs(inst) == doctest::Approx(2.0 / (pq.p * pq.p + pq.p) + fb / pq.q).epsilon(1e-15));
    CHECK(std::abs(rhs_young(inst) - 2.0 * corollary_rhs(inst)) < 1e-12);
  }
}

TEST_CASE("ConcaveJensen nodes and example") {
  auto nodes = concave_jensen_nodes(0.0, 1.0, 1.0);
  CHECK(nodes[0] == doctest::Approx(2.0 / 3.0 * 0.0 + 1.0 / 3.0));
  CHECK(nodes[1] == doctest::Approx(1.0 / 6.0));
  CHECK(nodes[2] == doctest::Approx(5.0 / 6.0));
  CHECK(nodes[3] == doctest::Approx(2.0 / 3.0));
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> al(1e-6, 1.0);
  std::uniform_real_distribution<double> ends(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    double a = ends(rng);
    double b = ends(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    for (double x : concave_jensen_nodes(a, b, al(rng))) {
      CHECK(x > a);
      CHECK(x < b);
    }
  }
  CHECK(concave_jensen_nodes(0.0, 1.0, 1.0 - 1e-16)[0] < 1.0);
  const auto& s = lookup("sqrt_deriv");
  const auto rep = verify_bound(make(s, 0, 1, 0.5, Theorem::ConcaveJensen));
  double want = 0.0;
  for (double x : concave_jensen_nodes(0.0, 1.0, 0.5)) want += std::sqrt(x + 0.01);
  CHECK(rep.rhs == doctest::Approx(want / 1.5).epsilon(1e-14));
  CHECK(rep.slack >= 0.0);
}

TEST_CASE("ConcaveHolder example and quartile nodes") {
  const auto& s = lookup("sqrt_deriv");
  const auto rep = verify_bound(make(s, 0.01, 1, 0.5, Theorem::ConcaveHolder, 2.0, 2.0));
  const double want = 2.0 / std::sqrt(2.0) * (std::sqrt((3.0 * 0.01 + 1.0) / 4.0 + 0.01) +
                                              std::sqrt((0.01 + 3.0) / 4.0 + 0.01));
  CHECK(rep.rhs == doctest::Approx(want).epsilon(1e-14));
  CHECK(rep.slack >= 0.0);
}

TEST_CASE("sign-changing cubic lacks the certified hypothesis") {
  auto cubic = fixture::monomial(3);
  cubic.flags.abs_fprime_convex = true;  // |3x^2| is convex, nothing about |f'|^q concavity
  const auto rep = verify_bound(make(cubic, -1, 1, 0.5, Theorem::ConcaveHolder));
  CHECK(rep.status == BoundStatus::HypothesisUnmet);
  CHECK_THROWS_AS(rhs_concave_holder(make(cubic, -1, 1, 0.5, Theorem::ConcaveHolder)), HypothesisUnmet);
  CHECK(verify_bound(make(cubic, -1, 1, 0.5, Theorem::ConvexAbs)).status == BoundStatus::Holds);
}

TEST_CASE("hypothesis gates") {
  const auto& sine = lookup("sine");
  CHECK(verify_bound(make(sine, 0, 1, 0.5, Theorem::ConvexAbs)).status == BoundStatus::HypothesisUnmet);
  CHECK(verify_bound(make(sine, 0, 1, 0.5, Theorem::Holder)).status == BoundStatus::HypothesisUnmet);
  CHECK(verify_bound(make(sine, 0, 1, 0.5, Theorem::ConcaveJensen)).status == BoundStatus::Holds);
  const auto& xl = lookup("xlogx");
  CHECK(verify_bound(make(xl, 0.5, 2, 0.5, Theorem::Holder, 2.0, 2.0)).status == BoundStatus::HypothesisUnmet);
  CHECK(verify_bound(make(xl, 0.5, 2, 0.5, Theorem::Holder, 1.5, 3.0)).status == BoundStatus::Holds);
  CHECK(verify_bound(make(xl, 0.1, 2, 0.5, Theorem::ConcaveJensen)).status == BoundStatus::HypothesisUnmet);
  const auto unmet = verify_bound(make(sine, 0, 1, 0.5, Theorem::Young));
  CHECK(std::isnan(unmet.slack));
  CHECK(hypothesis_failure(make(sine, 0, 1, 0.5, Theorem::Young)).has_value());
  CHECK_FALSE(hypothesis_failure(make(sine, 0, 1, 0.5, Theorem::ConcaveJensen)).has_value());
}

TEST_CASE("parameter validation") {
  const auto& q = lookup("quadratic");
  CHECK_THROWS_AS(rhs_holder(make(q, 0, 1, 0.5, Theorem::Holder, 2.0, 3.0)), DomainError);
  CHECK_THROWS_AS(rhs_young(make(q, 0, 1, 0.5, Theorem::Young, 1.0, 1e9)), DomainError);
  CHECK_THROWS_AS(rhs_power_mean(make(q, 0, 1, 0.5, Theorem::PowerMean, 2.0, 0.5)), DomainError);
  CHECK_THROWS_AS(rhs_convex_abs(make(q, 0, 1, 0.0, Theorem::ConvexAbs)), DomainError);
  CHECK_THROWS_AS(rhs_convex_abs(make(q, 1, 0, 0.5, Theorem::ConvexAbs)), DomainError);
  CHECK_THROWS_AS(theorem_rhs(make(q, 0, 1, 0.5, Theorem::Bullen)), DomainError);
}

TEST_CASE("Hermite-Hadamard and Bullen examples") {
  const auto& q = lookup("quadratic");
  const auto hh = check_hermite_hadamard(q, 0, 1);
  CHECK(hh.lhs_abs == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(hh.rhs == doctest::Approx(0.5));
  CHECK(*hh.aux_slack == doctest::Approx(1.0 / 3.0 - 0.25).epsilon(1e-12));
  const auto bu = check_bullen(q, 0, 1);
  CHECK(bu.rhs == doctest::Approx(3.0 / 8.0));
  CHECK(bu.slack == doctest::Approx(3.0 / 8.0 - 1.0 / 3.0).epsilon(1e-12));
  const auto& e = lookup("exp");
  const auto he = check_hermite_hadamard(e, 0, 1);
  CHECK(he.lhs_abs == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(*he.aux_slack == doctest::Approx(std::exp(1.0) - 1.0 - std::exp(0.5)).epsilon(1e-12));
  CHECK(he.slack == doctest::Approx((1.0 + std::exp(1.0)) / 2.0 - (std::exp(1.0) - 1.0)).epsilon(1e-12));
  const auto& lin = lookup("linear");
  for (const auto& iv : lin.grid_intervals) {
    const auto r = check_hermite_hadamard(lin, iv.lo, iv.hi);
    CHECK(std::abs(r.slack) < 1e-12);
    CHECK(std::abs(*r.aux_slack) < 1e-12);
    CHECK(std::abs(check_bullen(lin, iv.lo, iv.hi).slack) < 1e-12);
  }
  CHECK_THROWS_AS(check_hermite_hadamard(fixture::monomial(3), -1, 1), HypothesisUnmet);
}

TEST_CASE("concave functions satisfy the reversed classical inequalities") {
  const auto& s = lookup("sine");
  for (const auto& iv : s.grid_intervals) {
    const auto hh = check_hermite_hadamard(s, iv.lo, iv.hi);
    CHECK(hh.status == BoundStatus::Holds);
    CHECK(hh.slack > 0.0);
    CHECK(*hh.aux_slack > 0.0);
    CHECK(check_bullen(s, iv.lo, iv.hi).slack > 0.0);
  }
}

TEST_CASE("classical checks hold on the corpus grid") {
  for (const auto& f : builtins()) {
    for (const auto& iv : f.grid_intervals) {
      INFO(f.name << " [" << iv.lo << ", " << iv.hi << "]");
      const auto hh = check_hermite_hadamard(f, iv.lo, iv.hi);
      const auto bu = check_bullen(f, iv.lo, iv.hi);
      CHECK(hh.status == BoundStatus::Holds);
      CHECK(bu.status == BoundStatus::Holds);
    }
  }
}

TEST_CASE("every hypothesis-matching instance holds for alpha in steps of 0.1") {
  int checked = 0;
  for (const auto& f : builtins()) {
    for (const auto& iv : f.grid_intervals) {
      for (int k = 1; k <= 10; ++k) {
        const double alpha = 0.1 * k;
        for (Theorem t : kFractional) {
          for (const auto& pq : kPairs) {
            const auto inst = make(f, iv.lo, iv.hi, alpha, t, pq.p, pq.q);
            const auto rep = verify_bound(inst);
            if (rep.status == BoundStatus::HypothesisUnmet) continue;
            ++checked;
            INFO(f.name << " [" << iv.lo << ", " << iv.hi << "] alpha=" << alpha << " " << theorem_name(t)
                        << " p=" << pq.p << " q=" << pq.q);
            CHECK(rep.slack >= -kSlackTolerance);
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("positive scaling multiplies the homogeneous bounds") {
  const double c = 2.7;
  for (const auto& f : builtins()) {
    const auto g = scaled(f, c);
    const auto& iv = f.grid_intervals.back();
    for (double alpha : {0.3, 0.8}) {
      const auto tol = [](double v) { return 1e-10 * std::max(1.0, std::abs(v)); };
      INFO(f.name << " alpha=" << alpha);
      const double l = lhs_abs(make(f, iv.lo, iv.hi, alpha, Theorem::ConvexAbs));
      const double lg = lhs_abs(make(g, iv.lo, iv.hi, alpha, Theorem::ConvexAbs));
      CHECK(std::abs(lg - c * l) <= tol(c * l));
      if (f.flags.abs_fprime_convex) {
        const double r = rhs_convex_abs(make(f, iv.lo, iv.hi, alpha, Theorem::ConvexAbs));
        CHECK(std::abs(rhs_convex_abs(make(g, iv.lo, iv.hi, alpha, Theorem::ConvexAbs)) - c * r) <= tol(c * r));
      }
      if (f.flags.abs_fprime_concave) {
        const double r = rhs_concave_jensen(make(f, iv.lo, iv.hi, alpha, Theorem::ConcaveJensen));
        CHECK(std::abs(rhs_concave_jensen(make(g, iv.lo, iv.hi, alpha, Theorem::ConcaveJensen)) - c * r) <=
              tol(c * r));
      }
      if (f.abs_fprime_pow_concave(2.0)) {
        const double r = rhs_concave_holder(make(f, iv.lo, iv.hi, alpha, Theorem::ConcaveHolder));
        CHECK(std::abs(rhs_concave_holder(make(g, iv.lo, iv.hi, alpha, Theorem::ConcaveHolder)) - c * r) <=
              tol(c * r));
      }
    }
  }
}

TEST_CASE("general form at alpha = 1 against the printed corollaries") {
  for (const auto& f : builtins()) {
    for (const auto& iv : f.grid_intervals) {
      for (Theorem t : kFractional) {
        for (const auto& pq : kPairs) {
          const auto inst = make(f, iv.lo, iv.hi, 1.0, t, pq.p, pq.q);
          if (hypothesis_failure(inst)) continue;
          const double ratio = printed_corollary_ratio(t);
          const double rhs = theorem_rhs(inst);
          const double lhs = lhs_abs(inst);
          INFO(f.name << " " << theorem_name(t) << " p=" << pq.p);
          CHECK(std::abs(rhs - ratio * corollary_rhs(inst)) <= 1e-12 * std::max(1.0, std::abs(rhs)));
          CHECK(std::abs(lhs - ratio * corollary_lhs_abs(t, f, iv.lo, iv.hi)) <= 1e-10 * std::max(1.0, lhs));
        }
      }
    }
  }
  CHECK(printed_corollary_ratio(Theorem::PowerMean) == 1.0);
  CHECK(printed_corollary_ratio(Theorem::Holder) == 2.0);
  const auto& q = lookup("quadratic");
  const auto ch = make(q, 0, 1, 1.0, Theorem::ConcaveHolder, 3.0, 1.5);
  CHECK(corollary_rhs(make(lookup("sqrt_deriv"), 0, 1, 1.0, Theorem::ConcaveHolder, 3.0, 1.5)) ==
        doctest::Approx(1.0 / std::pow(4.0, 1.0 / 3.0) * (std::sqrt(0.26) + std::sqrt(0.76))).epsilon(1e-14));
  CHECK_THROWS_AS(corollary_rhs(ch), HypothesisUnmet);
}
