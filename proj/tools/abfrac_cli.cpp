#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abfrac/bounds.hpp"
#include "abfrac/corpus.hpp"
#include "abfrac/errors.hpp"
#include "abfrac/operators.hpp"
#include "abfrac/report.hpp"
#include "abfrac/run_config.hpp"

using namespace abfrac;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct VerifyArgs {
  std::string config_path;
  std::vector<std::string> functions;
  std::string alphas;
  std::string pq;
  std::vector<std::string> intervals;
  std::string theorems;
  std::string format;
  std::string out;
  std::string norm;
  std::vector<std::string> rhs_scale;
};

int cmd_verify(const VerifyArgs& args) {
  RunConfig config;
  std::string path = args.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar)) path = env;
  }
  if (!path.empty()) config = load_config_file(path);

  if (!args.functions.empty()) config.functions = args.functions;
  if (!args.alphas.empty()) apply_setting(config, "alphas", args.alphas);
  if (!args.pq.empty()) apply_setting(config, "pq", args.pq);
  if (!args.theorems.empty()) apply_setting(config, "theorems", args.theorems);
  if (!args.intervals.empty()) {
    config.intervals.clear();
    for (const auto& iv : args.intervals) config.intervals.push_back(parse_interval("intervals", iv));
  }
  if (!args.format.empty()) config.format = parse_format("format", args.format);
  if (!args.out.empty()) config.output_path = args.out;
  if (!args.norm.empty()) config.norm = parse_norm("norm", args.norm);
  if (!args.rhs_scale.empty()) {
    config.rhs_scale.clear();
    for (const auto& s : args.rhs_scale) config.rhs_scale.push_back(parse_rhs_scale("rhs_scale", s));
  }

  const RunResult result = run_verify(config);
  const std::string text = render(config, result);
  if (config.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write '" << config.output_path << "'\n";
      return kExitIo;
    }
  }

  const auto& s = result.summary;
  std::fprintf(stderr, "%d records: %d holds, %d violated, %d hypothesis unmet; max identity residual %.3g; %.2f s\n",
               s.total, s.holds, s.violated, s.hypothesis_unmet, s.max_identity_residual, s.wall_time.count());
  return exit_status(s);
}

struct ComputeArgs {
  std::string op;
  std::string function;
  double a = 0.0;
  double b = 1.0;
  double tau = 0.0;
  double alpha = 0.5;
  std::string norm_positional;
  std::string norm;
};

int cmd_compute(const ComputeArgs& args) {
  using OpFn = double (*)(const OperatorPoint&);
  static const std::map<std::string, OpFn> ops = {
      {"rl_left", rl_integral_left}, {"ab_left", ab_integral_left}, {"ab_right", ab_integral_right},
      {"cf_left", cf_integral_left}, {"cf_right", cf_integral_right}, {"abc", abc_derivative},
      {"abr", abr_derivative},       {"cf_deriv", cf_derivative},
  };
  const auto it = ops.find(args.op);
  if (it == ops.end()) {
    std::string names;
    for (const auto& [name, fn] : ops) names += (names.empty() ? "" : ", ") + name;
    throw ConfigError("operator: unknown '" + args.op + "' (expected one of " + names + ")");
  }
  std::string norm_text = args.norm.empty() ? args.norm_positional : args.norm;
  const Normalization norm = norm_text.empty() ? Normalization::unit() : parse_norm("norm", norm_text);
  const TestFunction& f = lookup(args.function);
  const OperatorPoint pt(f, args.a, args.b, args.tau, FractionalOrder(args.alpha), norm);

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", it->second(pt));
  std::string text = buf;
  if (text.find_first_of(".eni") == std::string::npos) text += ".0";
  std::cout << text << '\n';
  return 0;
}

std::string format_q(double q) {
  if (std::isinf(q)) return q > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", q);
  return buf;
}

int cmd_list() {
  std::cout << "functions:\n";
  for (const auto& f : builtins()) {
    std::cout << "  " << f.name << "  " << f.formula << "  domain [" << format_q(f.domain.lo) << ", "
              << format_q(f.domain.hi) << "]\n";
    std::cout << "    f convex: " << (f.flags.f_convex ? "yes" : "no")
              << "  f concave: " << (f.flags.f_concave ? "yes" : "no")
              << "  |f'| convex: " << (f.flags.abs_fprime_convex ? "yes" : "no")
              << "  |f'| concave: " << (f.flags.abs_fprime_concave ? "yes" : "no") << '\n';
    for (const auto& qf : f.q_flags) {
      std::cout << "    |f'|^q " << (qf.shape == PowerShape::Convex ? "convex" : "concave") << " for q in ["
                << format_q(qf.q_lo) << ", " << format_q(qf.q_hi) << "]";
      if (!qf.why.empty()) std::cout << ": " << qf.why;
      std::cout << '\n';
    }
    for (const auto& j : f.justifications) std::cout << "    - " << j << '\n';
  }
  std::cout << "theorems:\n";
  for (Theorem t : all_theorems()) std::cout << "  " << theorem_name(t) << "  requires " << hypothesis_text(t) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional operator and inequality verification"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Run the identity and bound grid and write a report");
  verify->add_option("--config", vargs.config_path, std::string("Config file (default: $") + kConfigEnvVar + ")");
  verify->add_option("--function", vargs.functions, "Function name (repeatable)");
  verify->add_option("--alpha", vargs.alphas, "Comma-separated alphas in (0, 1]");
  verify->add_option("--pq", vargs.pq, "Comma-separated conjugate pairs p:q");
  verify->add_option("--interval", vargs.intervals, "Interval a:b (repeatable)");
  verify->add_option("--theorem", vargs.theorems, "Comma-separated theorem names");
  verify->add_option("--format", vargs.format, "json or csv");
  verify->add_option("--out", vargs.out, "Report path (default: stdout)");
  verify->add_option("--norm", vargs.norm, "unit or ab");
  verify->add_option("--rhs-scale", vargs.rhs_scale, "THEOREM:FACTOR, multiplies that RHS (repeatable)");

  ComputeArgs cargs;
  auto* compute = app.add_subcommand("compute", "Evaluate one operator");
  compute->add_option("OPERATOR", cargs.op)->required();
  compute->add_option("FUNCTION", cargs.function)->required();
  compute->add_option("A", cargs.a)->required();
  compute->add_option("B", cargs.b)->required();
  compute->add_option("TAU", cargs.tau)->required();
  compute->add_option("ALPHA", cargs.alpha)->required();
  compute->add_option("NORM", cargs.norm_positional, "unit or ab");
  compute->add_option("--norm", cargs.norm, "unit or ab");

  auto* list = app.add_subcommand("list", "List functions and theorems");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(vargs);
    if (compute->parsed()) return cmd_compute(cargs);
    if (list->parsed()) return cmd_list();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
