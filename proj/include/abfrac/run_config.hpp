#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abfrac/bounds.hpp"
#include "abfrac/corpus.hpp"
#include "abfrac/operators.hpp"
#include "abfrac/quadrature.hpp"

namespace abfrac {

struct ConjugatePair {
  double p;
  double q;
  friend bool operator==(const ConjugatePair&, const ConjugatePair&) = default;
};

enum class ReportFormat { Json, Csv };

/// Environment variable naming a config file read when --config is absent.
inline constexpr const char* kConfigEnvVar = "ABFRAC_CONFIG";

struct RunConfig {
  std::vector<std::string> functions;  // empty: every builtin
  std::vector<double> alphas{0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
  std::vector<ConjugatePair> pq_pairs{{2.0, 2.0}, {3.0, 1.5}, {1.5, 3.0}};
  std::vector<Theorem> theorems{all_theorems().begin(), all_theorems().end()};
  std::vector<Interval> intervals;  // empty: each function's own grid intervals
  quad::QuadSpec quad{};
  Normalization norm{};
  std::string output_path;  // empty: stdout
  ReportFormat format = ReportFormat::Json;
  /// Multiplies a theorem's RHS before classification. Only for exercising
  /// the exit-status gate.
  std::vector<std::pair<Theorem, double>> rhs_scale;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Applies one `key = value` setting. Lists are comma separated; pairs and
/// intervals use `x:y`.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads `key = value` lines ('#' starts a comment) on top of `base`.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

// Parsers shared with the CLI; all throw ConfigError with the field name.
std::vector<double> parse_real_list(const std::string& field, const std::string& text);
std::vector<ConjugatePair> parse_pq_list(const std::string& field, const std::string& text);
Interval parse_interval(const std::string& field, const std::string& text);
Normalization parse_norm(const std::string& field, const std::string& text);
ReportFormat parse_format(const std::string& field, const std::string& text);
std::pair<Theorem, double> parse_rhs_scale(const std::string& field, const std::string& text);

std::string_view norm_name(const Normalization& norm);

}  // namespace abfrac
