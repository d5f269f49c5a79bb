#include "abfrac/bounds.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "abfrac/errors.hpp"
#include "abfrac/identity.hpp"

namespace abfrac {

namespace {

constexpr std::array kTheorems = {Theorem::ConvexAbs,     Theorem::Holder,        Theorem::PowerMean,
                                  Theorem::Young,         Theorem::ConcaveJensen, Theorem::ConcaveHolder,
                                  Theorem::HermiteHadamard, Theorem::Bullen};

void require_alpha(const BoundInstance& inst) {
  if (!(inst.alpha > 0.0 && inst.alpha <= 1.0)) {
    std::ostringstream os;
    os << theorem_name(inst.theorem) << ": alpha must be in (0, 1] (got " << inst.alpha << ")";
    throw DomainError(os.str());
  }
}

void require_conjugate(const BoundInstance& inst) {
  if (!(inst.p > 1.0 && inst.q > 1.0) || std::abs(1.0 / inst.p + 1.0 / inst.q - 1.0) > 1e-12) {
    std::ostringstream os;
    os << theorem_name(inst.theorem) << ": p=" << inst.p << ", q=" << inst.q
       << " are not conjugate exponents (1/p + 1/q = 1, p, q > 1)";
    throw DomainError(os.str());
  }
}

void require_hypothesis(const BoundInstance& inst) {
  if (auto why = hypothesis_failure(inst)) throw HypothesisUnmet(*why);
}

void prepare(const BoundInstance& inst) {
  if (inst.f == nullptr) throw DomainError("BoundInstance: no function");
  if (!(inst.a < inst.b)) throw DomainError("BoundInstance: requires a < b");
  if (!is_classical(inst.theorem)) require_alpha(inst);
  if (uses_conjugate_pair(inst.theorem)) require_conjugate(inst);
  if (uses_q_only(inst.theorem) && !(inst.q >= 1.0)) throw DomainError("PowerMean: q must be >= 1");
  require_hypothesis(inst);
}

struct EndpointSlopes {
  double at_a;  // |f'(a)|
  double at_b;  // |f'(b)|
};

EndpointSlopes slopes(const BoundInstance& inst) {
  return {std::abs(inst.f->fprime(inst.a)), std::abs(inst.f->fprime(inst.b))};
}

double integral_mean(const TestFunction& f, double a, double b, const quad::QuadSpec& quad) {
  return quad::integrate([&f](double x) { return f.f(x); }, a, b, quad) / (b - a);
}

}  // namespace

std::span<const Theorem> all_theorems() { return kTheorems; }

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::ConvexAbs: return "ConvexAbs";
    case Theorem::Holder: return "Holder";
    case Theorem::PowerMean: return "PowerMean";
    case Theorem::Young: return "Young";
    case Theorem::ConcaveJensen: return "ConcaveJensen";
    case Theorem::ConcaveHolder: return "ConcaveHolder";
    case Theorem::HermiteHadamard: return "HermiteHadamard";
    case Theorem::Bullen: return "Bullen";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : kTheorems) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view hypothesis_text(Theorem t) {
  switch (t) {
    case Theorem::ConvexAbs: return "|f'| convex";
    case Theorem::Holder: return "|f'|^q convex, 1/p + 1/q = 1, q > 1";
    case Theorem::PowerMean: return "|f'|^q convex, q >= 1";
    case Theorem::Young: return "|f'|^q convex, 1/p + 1/q = 1, q > 1";
    case Theorem::ConcaveJensen: return "|f'| concave";
    case Theorem::ConcaveHolder: return "|f'|^q concave, 1/p + 1/q = 1, q > 1";
    case Theorem::HermiteHadamard: return "f convex (reversed inequalities for f concave)";
    case Theorem::Bullen: return "f convex (reversed inequality for f concave)";
  }
  return "";
}

bool uses_conjugate_pair(Theorem t) {
  return t == Theorem::Holder || t == Theorem::Young || t == Theorem::ConcaveHolder;
}

bool uses_q_only(Theorem t) { return t == Theorem::PowerMean; }

bool is_classical(Theorem t) { return t == Theorem::HermiteHadamard || t == Theorem::Bullen; }

std::string_view status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Holds: return "Holds";
    case BoundStatus::Violated: return "Violated";
    case BoundStatus::HypothesisUnmet: return "HypothesisUnmet";
  }
  return "?";
}

std::optional<std::string> hypothesis_failure(const BoundInstance& inst) {
  const TestFunction& f = *inst.f;
  if (!f.domain.contains(Interval{inst.a, inst.b})) {
    return f.name + ": interval outside the function's domain";
  }
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << theorem_name(inst.theorem) << " needs " << what << "; not certified for " << f.name;
    return std::optional<std::string>(os.str());
  };
  std::ostringstream qs;
  qs << "|f'|^q (q=" << inst.q << ")";
  switch (inst.theorem) {
    case Theorem::ConvexAbs:
      if (!f.flags.abs_fprime_convex) return fail("|f'| convex");
      break;
    case Theorem::Holder:
    case Theorem::PowerMean:
    case Theorem::Young:
      if (!f.abs_fprime_pow_convex(inst.q)) return fail(qs.str() + " convex");
      break;
    case Theorem::ConcaveJensen:
      if (!f.flags.abs_fprime_concave) return fail("|f'| concave");
      break;
    case Theorem::ConcaveHolder:
      if (!f.abs_fprime_pow_concave(inst.q)) return fail(qs.str() + " concave");
      break;
    case Theorem::HermiteHadamard:
    case Theorem::Bullen:
      if (!f.flags.f_convex && !f.flags.f_concave) return fail("f convex or concave");
      break;
  }
  return std::nullopt;
}

double rhs_convex_abs(const BoundInstance& inst) {
  prepare(inst);
  const auto s = slopes(inst);
  return 2.0 * (s.at_a + s.at_b) / (inst.alpha + 1.0);
}

double rhs_holder(const BoundInstance& inst) {
  prepare(inst);
  const auto s = slopes(inst);
  const double p = inst.p;
  const double q = inst.q;
  const double fa = std::pow(s.at_a, q);
  const double fb = std::pow(s.at_b, q);
  const double prefactor = 2.0 / std::pow(inst.alpha * p + 1.0, 1.0 / p);
  return prefactor * (std::pow((3.0 * fa + fb) / 4.0, 1.0 / q) + std::pow((3.0 * fb + fa) / 4.0, 1.0 / q));
}

double rhs_power_mean(const BoundInstance& inst) {
  prepare(inst);
  const auto s = slopes(inst);
  const double al = inst.alpha;
  const double q = inst.q;
  const double fa = std::pow(s.at_a, q);
  const double fb = std::pow(s.at_b, q);
  const double d12 = 2.0 * (al + 1.0) * (al + 2.0);
  // Weights of the four power-mean rows: int (1-t)^a (1+t)/2, int (1-t)^a (1-t)/2,
  // int t^a (1+t)/2, int t^a (1-t)/2 over [0, 1].
  const double w_outer_near = (al + 3.0) / d12;
  const double w_outer_far = 1.0 / (2.0 * (al + 2.0));
  const double w_inner_near = (2.0 * al + 3.0) / d12;
  const double w_inner_far = 1.0 / d12;
  const double root = 1.0 / q;
  const double sum = std::pow(w_outer_near * fa + w_outer_far * fb, root) +
                     std::pow(w_inner_near * fa + w_inner_far * fb, root) +
                     std::pow(w_inner_near * fb + w_inner_far * fa, root) +
                     std::pow(w_outer_near * fb + w_outer_far * fa, root);
  return std::pow(1.0 / (al + 1.0), 1.0 - root) * sum;
}

double rhs_young(const BoundInstance& inst) {
  prepare(inst);
  const auto s = slopes(inst);
  const double p = inst.p;
  const double q = inst.q;
  return 4.0 / (p * (inst.alpha * p + 1.0)) + 2.0 * (std::pow(s.at_a, q) + std::pow(s.at_b, q)) / q;
}

std::array<double, 4> concave_jensen_nodes(double a, double b, double alpha) {
  const double d = 2.0 * (alpha + 2.0);
  return {(a * (alpha + 3.0) + b * (alpha + 1.0)) / d, (a * (2.0 * alpha + 3.0) + b) / d,
          (b * (2.0 * alpha + 3.0) + a) / d, (b * (alpha + 3.0) + a * (alpha + 1.0)) / d};
}

double rhs_concave_jensen(const BoundInstance& inst) {
  prepare(inst);
  double sum = 0.0;
  for (double x : concave_jensen_nodes(inst.a, inst.b, inst.alpha)) sum += std::abs(inst.f->fprime(x));
  return sum / (inst.alpha + 1.0);
}

double rhs_concave_holder(const BoundInstance& inst) {
  prepare(inst);
  const double a = inst.a;
  const double b = inst.b;
  const double prefactor = 2.0 / std::pow(inst.alpha * inst.p + 1.0, 1.0 / inst.p);
  return prefactor *
         (std::abs(inst.f->fprime((3.0 * a + b) / 4.0)) + std::abs(inst.f->fprime((3.0 * b + a) / 4.0)));
}

double theorem_rhs(const BoundInstance& inst) {
  switch (inst.theorem) {
    case Theorem::ConvexAbs: return rhs_convex_abs(inst);
    case Theorem::Holder: return rhs_holder(inst);
    case Theorem::PowerMean: return rhs_power_mean(inst);
    case Theorem::Young: return rhs_young(inst);
    case Theorem::ConcaveJensen: return rhs_concave_jensen(inst);
    case Theorem::ConcaveHolder: return rhs_concave_holder(inst);
    case Theorem::HermiteHadamard:
    case Theorem::Bullen:
      break;
  }
  throw DomainError(std::string("theorem_rhs: ") + std::string(theorem_name(inst.theorem)) +
                    " is a classical check; use check_hermite_hadamard / check_bullen");
}

double lhs_abs(const BoundInstance& inst) {
  LemmaInstance lemma{inst.f, inst.a, inst.b, inst.alpha, inst.norm, inst.quad};
  return std::abs(lemma_lhs(lemma));
}

BoundReport make_report(double lhs, double rhs) {
  BoundReport r;
  r.lhs_abs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.status = r.slack >= -kSlackTolerance ? BoundStatus::Holds : BoundStatus::Violated;
  return r;
}

BoundReport check_hermite_hadamard(const TestFunction& f, double a, double b, const quad::QuadSpec& quad) {
  BoundInstance inst{&f, a, b, 1.0, 2.0, 2.0, Theorem::HermiteHadamard, {}, quad};
  prepare(inst);
  const double mean = integral_mean(f, a, b, quad);
  const double mid = f.f(0.5 * (a + b));
  const double ends = 0.5 * (f.f(a) + f.f(b));
  BoundReport r;
  r.lhs_abs = mean;
  if (f.flags.f_convex) {
    r.rhs = ends;
    r.slack = ends - mean;
    r.aux_slack = mean - mid;
  } else {
    r.rhs = mid;
    r.slack = mid - mean;
    r.aux_slack = mean - ends;
  }
  const bool ok = r.slack >= -kSlackTolerance && *r.aux_slack >= -kSlackTolerance;
  r.status = ok ? BoundStatus::Holds : BoundStatus::Violated;
  return r;
}

BoundReport check_bullen(const TestFunction& f, double a, double b, const quad::QuadSpec& quad) {
  BoundInstance inst{&f, a, b, 1.0, 2.0, 2.0, Theorem::Bullen, {}, quad};
  prepare(inst);
  const double mean = integral_mean(f, a, b, quad);
  const double bound = 0.5 * (f.f(0.5 * (a + b)) + 0.5 * (f.f(a) + f.f(b)));
  BoundReport r;
  r.lhs_abs = mean;
  r.rhs = bound;
  r.slack = f.flags.f_convex ? bound - mean : mean - bound;
  r.status = r.slack >= -kSlackTolerance ? BoundStatus::Holds : BoundStatus::Violated;
  return r;
}

BoundReport verify_bound(const BoundInstance& inst) {
  try {
    switch (inst.theorem) {
      case Theorem::HermiteHadamard: return check_hermite_hadamard(*inst.f, inst.a, inst.b, inst.quad);
      case Theorem::Bullen: return check_bullen(*inst.f, inst.a, inst.b, inst.quad);
      default: break;
    }
    const double rhs = theorem_rhs(inst);
    return make_report(lhs_abs(inst), rhs);
  } catch (const HypothesisUnmet&) {
    BoundReport r;
    r.status = BoundStatus::HypothesisUnmet;
    r.lhs_abs = std::nan("");
    r.rhs = std::nan("");
    r.slack = std::nan("");
    return r;
  }
}

double corollary_lhs_abs(Theorem t, const TestFunction& f, double a, double b, const quad::QuadSpec& quad) {
  const double len = b - a;
  const double point = (f.f(a) + f.f(b) + 2.0 * f.f(0.5 * (a + b))) / len;
  const double integral = quad::integrate([&f](double x) { return f.f(x); }, a, b, quad);
  const double value = std::abs(point - 4.0 / (len * len) * integral);
  return t == Theorem::PowerMean ? 2.0 * value : value;
}

double corollary_rhs(const BoundInstance& inst) {
  BoundInstance at_one = inst;
  at_one.alpha = 1.0;
  prepare(at_one);
  const double a = inst.a;
  const double b = inst.b;
  const TestFunction& f = *inst.f;
  const double p = inst.p;
  const double q = inst.q;
  const double da = std::abs(f.fprime(a));
  const double db = std::abs(f.fprime(b));
  const double fa = std::pow(da, q);
  const double fb = std::pow(db, q);
  switch (inst.theorem) {
    case Theorem::ConvexAbs:
      return (da + db) / 2.0;
    case Theorem::Holder:
      return 1.0 / std::pow(p + 1.0, 1.0 / p) *
             (std::pow((3.0 * fa + fb) / 4.0, 1.0 / q) + std::pow((3.0 * fb + fa) / 4.0, 1.0 / q));
    case Theorem::PowerMean:
      return std::pow(0.5, 1.0 - 1.0 / q) *
             (std::pow((2.0 * fa + fb) / 6.0, 1.0 / q) + std::pow((5.0 * fa + fb) / 12.0, 1.0 / q) +
              std::pow((5.0 * fb + fa) / 12.0, 1.0 / q) + std::pow((2.0 * fb + fa) / 6.0, 1.0 / q));
    case Theorem::Young:
      return 2.0 / (p * p + p) + (fa + fb) / q;
    case Theorem::ConcaveJensen:
      return 0.25 * (std::abs(f.fprime((2.0 * a + b) / 3.0)) + std::abs(f.fprime((5.0 * a + b) / 6.0)) +
                     std::abs(f.fprime((5.0 * b + a) / 6.0)) + std::abs(f.fprime((2.0 * b + a) / 3.0)));
    case Theorem::ConcaveHolder:
      return 1.0 / std::pow(p + 1.0, 1.0 / p) *
             (std::abs(f.fprime((3.0 * a + b) / 4.0)) + std::abs(f.fprime((3.0 * b + a) / 4.0)));
    case Theorem::HermiteHadamard:
    case Theorem::Bullen:
      break;
  }
  throw DomainError("corollary_rhs: no corollary for classical checks");
}

double printed_corollary_ratio(Theorem t) { return t == Theorem::PowerMean ? 1.0 : 2.0; }

}  // namespace abfrac
