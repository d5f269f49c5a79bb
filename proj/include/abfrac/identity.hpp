#pragma once

#include "abfrac/corpus.hpp"
#include "abfrac/operators.hpp"
#include "abfrac/quadrature.hpp"

namespace abfrac {

struct LemmaInstance {
  const TestFunction* f = nullptr;
  double a = 0.0;
  double b = 1.0;
  double alpha = 0.5;
  Normalization norm{};
  quad::QuadSpec quad{};

  /// Throws DomainError unless f is set, a < b, [a, b] lies in f's domain
  /// and 0 < alpha <= 1.
  void validate() const;
};

struct LemmaReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;      // |lhs - rhs|
  double rel_residual = 0.0;  // residual / max(1, |rhs|)
};

/// The four AB integrals of the left-hand side, with m = (a + b) / 2:
/// right-sided at a over [a, m], left-sided at m over [a, m], left-sided at
/// b over [m, b], right-sided at m over [m, b].
struct LemmaOperatorTerms {
  double right_at_a = 0.0;
  double left_at_m_from_a = 0.0;
  double left_at_b_from_m = 0.0;
  double right_at_m = 0.0;

  double sum() const { return right_at_a + left_at_m_from_a + left_at_b_from_m + right_at_m; }
};

LemmaOperatorTerms lemma_operator_terms(const LemmaInstance& inst);

/// [2(b-a)^a + (1-a) 2^{a+1} Gamma(a)] / (b-a)^{a+1} [f(a) + f(b) + 2 f(m)]
///   - 2^{a+1} B(a) Gamma(a) / (b-a)^{a+1} * (sum of the four AB integrals).
double lemma_lhs(const LemmaInstance& inst);

struct LemmaRhsParts {
  double i1 = 0.0;  // int_0^1 ((1-t)^a - t^a) f'((1+t)/2 a + (1-t)/2 b) dt
  double i2 = 0.0;  // int_0^1 (t^a - (1-t)^a) f'((1+t)/2 b + (1-t)/2 a) dt
};

LemmaRhsParts lemma_rhs_parts(const LemmaInstance& inst);

/// I1 + I2.
double lemma_rhs(const LemmaInstance& inst);

LemmaReport verify_lemma(const LemmaInstance& inst);

/// Default pass threshold on LemmaReport::rel_residual.
inline constexpr double kIdentityThreshold = 1e-7;

}  // namespace abfrac
