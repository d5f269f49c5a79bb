#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "abfrac/corpus.hpp"
#include "abfrac/operators.hpp"
#include "abfrac/quadrature.hpp"

namespace abfrac {

enum class Theorem {
  ConvexAbs,
  Holder,
  PowerMean,
  Young,
  ConcaveJensen,
  ConcaveHolder,
  HermiteHadamard,
  Bullen,
};

std::span<const Theorem> all_theorems();
std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view hypothesis_text(Theorem t);

/// Holder, Young and ConcaveHolder take a conjugate pair (p, q).
bool uses_conjugate_pair(Theorem t);
/// PowerMean takes q >= 1 alone.
bool uses_q_only(Theorem t);
/// HermiteHadamard and Bullen do not depend on alpha.
bool is_classical(Theorem t);

struct BoundInstance {
  const TestFunction* f = nullptr;
  double a = 0.0;
  double b = 1.0;
  double alpha = 1.0;
  double p = 2.0;
  double q = 2.0;
  Theorem theorem = Theorem::ConvexAbs;
  Normalization norm{};
  quad::QuadSpec quad{};
};

enum class BoundStatus { Holds, Violated, HypothesisUnmet };
std::string_view status_name(BoundStatus s);

/// For the fractional theorems lhs_abs is |lemma LHS|. For the classical
/// checks it is the integral mean (1/(b-a)) int f, and aux_slack carries the
/// second Hermite-Hadamard inequality.
struct BoundReport {
  double lhs_abs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::optional<double> aux_slack;
  BoundStatus status = BoundStatus::HypothesisUnmet;
};

inline constexpr double kSlackTolerance = 1e-9;

/// Empty when the function's certified flags satisfy the theorem's
/// hypothesis, otherwise the reason.
std::optional<std::string> hypothesis_failure(const BoundInstance& inst);

// Right-hand sides. Each throws HypothesisUnmet when the metadata gate fails
// and DomainError on invalid (alpha, p, q).

/// 2 (|f'(a)| + |f'(b)|) / (alpha + 1).
double rhs_convex_abs(const BoundInstance& inst);
/// 2/(alpha p + 1)^{1/p} [((3A + B)/4)^{1/q} + ((3B + A)/4)^{1/q}], A = |f'(a)|^q, B = |f'(b)|^q.
double rhs_holder(const BoundInstance& inst);
double rhs_power_mean(const BoundInstance& inst);
/// 4/(p (alpha p + 1)) + 2 (|f'(a)|^q + |f'(b)|^q) / q.
double rhs_young(const BoundInstance& inst);
double rhs_concave_jensen(const BoundInstance& inst);
/// 2/(alpha p + 1)^{1/p} [|f'((3a + b)/4)| + |f'((a + 3b)/4)|].
double rhs_concave_holder(const BoundInstance& inst);

/// Dispatch over the six fractional theorems.
double theorem_rhs(const BoundInstance& inst);

/// The four Jensen evaluation nodes of the concave theorem, left to right
/// in the order they appear in the bound.
std::array<double, 4> concave_jensen_nodes(double a, double b, double alpha);

/// |lemma LHS| for (f, a, b, alpha, norm, quad).
double lhs_abs(const BoundInstance& inst);

/// Classifies slack = rhs - lhs_abs against kSlackTolerance.
BoundReport make_report(double lhs_abs, double rhs);

/// Convex f: f(m) <= mean <= (f(a) + f(b))/2. Concave f: both reversed.
BoundReport check_hermite_hadamard(const TestFunction& f, double a, double b, const quad::QuadSpec& quad = {});
/// Convex f: mean <= (f(m) + (f(a) + f(b))/2) / 2. Concave f: reversed.
BoundReport check_bullen(const TestFunction& f, double a, double b, const quad::QuadSpec& quad = {});

/// Full check of one instance; HypothesisUnmet is reported, not thrown.
BoundReport verify_bound(const BoundInstance& inst);

// alpha = 1 corollaries, exactly as printed alongside each theorem.

/// |(f(a) + f(b) + 2 f(m))/(b - a) - 4/(b - a)^2 int_a^b f|; the power-mean
/// corollary prints twice this.
double corollary_lhs_abs(Theorem t, const TestFunction& f, double a, double b, const quad::QuadSpec& quad = {});
double corollary_rhs(const BoundInstance& inst);

/// Ratio general-form / printed corollary at alpha = 1, on both sides: 2 for
/// every theorem except PowerMean, whose corollary is printed unhalved.
double printed_corollary_ratio(Theorem t);

}  // namespace abfrac
