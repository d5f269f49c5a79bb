#include "abfrac/identity.hpp"

#include <cmath>
#include <sstream>

#include "abfrac/errors.hpp"
#include "abfrac/special_fn.hpp"

namespace abfrac {

void LemmaInstance::validate() const {
  if (f == nullptr) throw DomainError("LemmaInstance: no function");
  if (!(a < b)) throw DomainError("LemmaInstance: requires a < b");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("LemmaInstance: alpha must be in (0, 1]");
  if (!f->domain.contains(Interval{a, b})) {
    std::ostringstream os;
    os << "LemmaInstance: [" << a << ", " << b << "] is outside the domain of " << f->name;
    throw DomainError(os.str());
  }
}

LemmaOperatorTerms lemma_operator_terms(const LemmaInstance& inst) {
  inst.validate();
  const double m = 0.5 * (inst.a + inst.b);
  const FractionalOrder order(inst.alpha);
  const TestFunction& f = *inst.f;
  LemmaOperatorTerms t;
  t.right_at_a = ab_integral_right(OperatorPoint(f, inst.a, m, inst.a, order, inst.norm, inst.quad));
  t.left_at_m_from_a = ab_integral_left(OperatorPoint(f, inst.a, m, m, order, inst.norm, inst.quad));
  t.left_at_b_from_m = ab_integral_left(OperatorPoint(f, m, inst.b, inst.b, order, inst.norm, inst.quad));
  t.right_at_m = ab_integral_right(OperatorPoint(f, m, inst.b, m, order, inst.norm, inst.quad));
  return t;
}

double lemma_lhs(const LemmaInstance& inst) {
  inst.validate();
  const double alpha = inst.alpha;
  const double len = inst.b - inst.a;
  const double m = 0.5 * (inst.a + inst.b);
  const double g = gamma(alpha);
  const double two_pow = std::pow(2.0, alpha + 1.0);
  const double len_pow = std::pow(len, alpha + 1.0);
  const TestFunction& f = *inst.f;

  const double point_coeff = (2.0 * std::pow(len, alpha) + (1.0 - alpha) * two_pow * g) / len_pow;
  const double point_sum = f.f(inst.a) + f.f(inst.b) + 2.0 * f.f(m);
  const double op_coeff = two_pow * inst.norm(alpha) * g / len_pow;
  return point_coeff * point_sum - op_coeff * lemma_operator_terms(inst).sum();
}

LemmaRhsParts lemma_rhs_parts(const LemmaInstance& inst) {
  inst.validate();
  const double alpha = inst.alpha;
  const double a = inst.a;
  const double b = inst.b;
  const TestFunction& f = *inst.f;
  auto weight = [alpha](double t) { return std::pow(1.0 - t, alpha) - std::pow(t, alpha); };
  LemmaRhsParts parts;
  parts.i1 = quad::integrate(
      [&](double t) { return weight(t) * f.fprime(0.5 * (1.0 + t) * a + 0.5 * (1.0 - t) * b); }, 0.0, 1.0,
      inst.quad);
  parts.i2 = quad::integrate(
      [&](double t) { return -weight(t) * f.fprime(0.5 * (1.0 + t) * b + 0.5 * (1.0 - t) * a); }, 0.0, 1.0,
      inst.quad);
  return parts;
}

double lemma_rhs(const LemmaInstance& inst) {
  const auto parts = lemma_rhs_parts(inst);
  return parts.i1 + parts.i2;
}

LemmaReport verify_lemma(const LemmaInstance& inst) {
  LemmaReport r;
  r.lhs = lemma_lhs(inst);
  r.rhs = lemma_rhs(inst);
  r.residual = std::abs(r.lhs - r.rhs);
  r.rel_residual = r.residual / std::max(1.0, std::abs(r.rhs));
  return r;
}

}  // namespace abfrac
