#include "abfrac/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

#include "abfrac/identity.hpp"

namespace abfrac {

namespace {

std::string_view kind_name(RecordKind k) { return k == RecordKind::Identity ? "identity" : "bound"; }

double rhs_factor(const RunConfig& config, Theorem t) {
  double factor = 1.0;
  for (const auto& [theorem, scale] : config.rhs_scale) {
    if (theorem == t) factor *= scale;
  }
  return factor;
}

Record bound_record(const TestFunction& f, double a, double b, std::optional<double> alpha, Theorem t,
                    std::optional<double> p, std::optional<double> q, const BoundReport& rep) {
  Record r;
  r.kind = RecordKind::Bound;
  r.function = f.name;
  r.a = a;
  r.b = b;
  r.alpha = alpha;
  r.theorem = t;
  r.p = p;
  r.q = q;
  r.status = rep.status;
  if (rep.status != BoundStatus::HypothesisUnmet) {
    r.lhs = rep.lhs_abs;
    r.rhs = rep.rhs;
    r.slack = rep.aux_slack ? std::min(rep.slack, *rep.aux_slack) : rep.slack;
  }
  return r;
}

std::vector<Interval> intervals_for(const RunConfig& config, const TestFunction& f) {
  if (config.intervals.empty()) return f.grid_intervals;
  std::vector<Interval> out;
  for (const auto& iv : config.intervals) {
    if (f.domain.contains(iv)) out.push_back(iv);
  }
  return out;
}

void run_function(const RunConfig& config, const TestFunction& f, std::vector<Record>& records) {
  std::set<double> q_values;
  for (const auto& pq : config.pq_pairs) q_values.insert(pq.q);

  for (const auto& iv : intervals_for(config, f)) {
    const double a = iv.lo;
    const double b = iv.hi;

    for (Theorem t : config.theorems) {
      if (!is_classical(t)) continue;
      BoundReport rep =
          t == Theorem::HermiteHadamard ? check_hermite_hadamard(f, a, b, config.quad) : check_bullen(f, a, b, config.quad);
      const double factor = rhs_factor(config, t);
      if (factor != 1.0) {
        rep.rhs *= factor;
        const auto scaled = make_report(rep.lhs_abs, rep.rhs);
        rep.slack = scaled.slack;
        if (scaled.status == BoundStatus::Violated) rep.status = BoundStatus::Violated;
      }
      records.push_back(bound_record(f, a, b, std::nullopt, t, std::nullopt, std::nullopt, rep));
    }

    for (double alpha : config.alphas) {
      LemmaInstance li{&f, a, b, alpha, config.norm, config.quad};
      const LemmaReport lr = verify_lemma(li);
      Record id;
      id.kind = RecordKind::Identity;
      id.function = f.name;
      id.a = a;
      id.b = b;
      id.alpha = alpha;
      id.lhs = lr.lhs;
      id.rhs = lr.rhs;
      id.residual = lr.rel_residual;
      id.status = lr.rel_residual < kIdentityThreshold ? BoundStatus::Holds : BoundStatus::Violated;
      records.push_back(id);

      const double lhs = std::abs(lr.lhs);
      for (Theorem t : config.theorems) {
        if (is_classical(t)) continue;
        std::vector<std::pair<std::optional<double>, std::optional<double>>> params;
        if (uses_conjugate_pair(t)) {
          for (const auto& pq : config.pq_pairs) params.emplace_back(pq.p, pq.q);
        } else if (uses_q_only(t)) {
          for (double q : q_values) params.emplace_back(std::nullopt, q);
        } else {
          params.emplace_back(std::nullopt, std::nullopt);
        }
        for (const auto& [p, q] : params) {
          BoundInstance bi{&f, a, b, alpha, p.value_or(2.0), q.value_or(2.0), t, config.norm, config.quad};
          BoundReport rep;
          if (hypothesis_failure(bi)) {
            rep.status = BoundStatus::HypothesisUnmet;
          } else {
            rep = make_report(lhs, theorem_rhs(bi) * rhs_factor(config, t));
          }
          records.push_back(bound_record(f, a, b, alpha, t, p, q, rep));
        }
      }
    }
  }
}

void append_json_string(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  out += '"';
}

std::string optional_theorem(const std::optional<Theorem>& t) {
  return t ? std::string(theorem_name(*t)) : std::string();
}

}  // namespace

std::string format_real(std::optional<double> x) {
  if (!x || !std::isfinite(*x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *x);
  return buf;
}

void sort_records(std::vector<Record>& records) {
  auto key = [](const Record& r) {
    return std::make_tuple(std::cref(r.function), r.a, r.b, r.alpha.has_value(), r.alpha.value_or(0.0), r.kind,
                           r.theorem.has_value(), r.theorem.value_or(Theorem::ConvexAbs), r.p.value_or(0.0),
                           r.q.value_or(0.0));
  };
  std::stable_sort(records.begin(), records.end(), [&](const Record& x, const Record& y) { return key(x) < key(y); });
}

RunSummary summarize(const std::vector<Record>& records) {
  RunSummary s;
  for (const auto& r : records) {
    ++s.total;
    switch (r.status) {
      case BoundStatus::Holds: ++s.holds; break;
      case BoundStatus::Violated: ++s.violated; break;
      case BoundStatus::HypothesisUnmet: ++s.hypothesis_unmet; break;
    }
    if (r.kind == RecordKind::Identity && r.residual) {
      s.max_identity_residual = std::max(s.max_identity_residual, *r.residual);
    }
    if (r.kind == RecordKind::Bound && r.slack) {
      s.min_slack = s.min_slack ? std::min(*s.min_slack, *r.slack) : *r.slack;
    }
  }
  return s;
}

RunResult run_verify(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<const TestFunction*> fns;
  if (config.functions.empty()) {
    for (const auto& f : builtins()) fns.push_back(&f);
  } else {
    for (const auto& name : config.functions) fns.push_back(&lookup(name));
  }

  RunResult result;
  for (const auto* f : fns) run_function(config, *f, result.records);
  sort_records(result.records);
  result.summary = summarize(result.records);
  result.summary.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

int exit_status(const RunSummary& summary) {
  return summary.violated == 0 && summary.max_identity_residual < kIdentityThreshold ? 0 : 1;
}

std::string to_json(const RunConfig& config, const RunResult& result) {
  std::string out;
  out += "{\n  \"config_echo\": {\n    \"functions\": [";
  std::vector<std::string> names = config.functions;
  if (names.empty()) names = builtin_names();
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    append_json_string(out, names[i]);
  }
  out += "],\n    \"alphas\": [";
  for (size_t i = 0; i < config.alphas.size(); ++i) {
    if (i) out += ", ";
    out += format_real(config.alphas[i]);
  }
  out += "],\n    \"pq_pairs\": [";
  for (size_t i = 0; i < config.pq_pairs.size(); ++i) {
    if (i) out += ", ";
    out += "[" + format_real(config.pq_pairs[i].p) + ", " + format_real(config.pq_pairs[i].q) + "]";
  }
  out += "],\n    \"theorems\": [";
  for (size_t i = 0; i < config.theorems.size(); ++i) {
    if (i) out += ", ";
    append_json_string(out, theorem_name(config.theorems[i]));
  }
  out += "],\n    \"intervals\": ";
  if (config.intervals.empty()) {
    out += "\"per-function\"";
  } else {
    out += "[";
    for (size_t i = 0; i < config.intervals.size(); ++i) {
      if (i) out += ", ";
      out += "[" + format_real(config.intervals[i].lo) + ", " + format_real(config.intervals[i].hi) + "]";
    }
    out += "]";
  }
  out += ",\n    \"norm\": ";
  append_json_string(out, norm_name(config.norm));
  out += ",\n    \"quad\": {\"rel_tol\": " + format_real(config.quad.rel_tol) +
         ", \"abs_tol\": " + format_real(config.quad.abs_tol) +
         ", \"max_depth\": " + std::to_string(config.quad.max_depth) +
         ", \"nodes_per_panel\": " + std::to_string(config.quad.nodes_per_panel) + "}";
  if (!config.rhs_scale.empty()) {
    out += ",\n    \"rhs_scale\": {";
    for (size_t i = 0; i < config.rhs_scale.size(); ++i) {
      if (i) out += ", ";
      append_json_string(out, theorem_name(config.rhs_scale[i].first));
      out += ": " + format_real(config.rhs_scale[i].second);
    }
    out += "}";
  }
  const auto& s = result.summary;
  out += "\n  },\n  \"summary\": {";
  out += "\"total\": " + std::to_string(s.total);
  out += ", \"holds\": " + std::to_string(s.holds);
  out += ", \"violated\": " + std::to_string(s.violated);
  out += ", \"hypothesis_unmet\": " + std::to_string(s.hypothesis_unmet);
  out += ", \"max_identity_residual\": " + format_real(s.max_identity_residual);
  out += ", \"min_slack\": " + format_real(s.min_slack);
  out += "},\n  \"records\": [";
  for (size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    out += i ? ",\n    {" : "\n    {";
    out += "\"kind\": ";
    append_json_string(out, kind_name(r.kind));
    out += ", \"function\": ";
    append_json_string(out, r.function);
    out += ", \"a\": " + format_real(r.a) + ", \"b\": " + format_real(r.b);
    out += ", \"alpha\": " + format_real(r.alpha);
    if (r.theorem) {
      out += ", \"theorem\": ";
      append_json_string(out, theorem_name(*r.theorem));
    }
    if (r.p) out += ", \"p\": " + format_real(r.p);
    if (r.q) out += ", \"q\": " + format_real(r.q);
    out += ", \"lhs\": " + format_real(r.lhs) + ", \"rhs\": " + format_real(r.rhs);
    if (r.kind == RecordKind::Bound) out += ", \"slack\": " + format_real(r.slack);
    if (r.kind == RecordKind::Identity) out += ", \"residual\": " + format_real(r.residual);
    out += ", \"status\": ";
    append_json_string(out, status_name(r.status));
    out += "}";
  }
  out += result.records.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string to_csv(const RunResult& result) {
  auto cell = [](std::optional<double> x) { return x && std::isfinite(*x) ? format_real(x) : std::string(); };
  std::ostringstream os;
  os << "kind,function,a,b,alpha,theorem,p,q,lhs,rhs,slack,residual,status\n";
  for (const auto& r : result.records) {
    os << kind_name(r.kind) << ',' << r.function << ',' << cell(r.a) << ',' << cell(r.b) << ',' << cell(r.alpha)
       << ',' << optional_theorem(r.theorem) << ',' << cell(r.p) << ',' << cell(r.q) << ',' << cell(r.lhs) << ','
       << cell(r.rhs) << ',' << cell(r.slack) << ',' << cell(r.residual) << ',' << status_name(r.status) << '\n';
  }
  return os.str();
}

std::string render(const RunConfig& config, const RunResult& result) {
  return config.format == ReportFormat::Json ? to_json(config, result) : to_csv(result);
}

}  // namespace abfrac
