#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "abfrac/bounds.hpp"
#include "abfrac/run_config.hpp"

namespace abfrac {

enum class RecordKind { Identity, Bound };

struct Record {
  RecordKind kind = RecordKind::Identity;
  std::string function;
  double a = 0.0;
  double b = 0.0;
  std::optional<double> alpha;  // absent for the classical checks
  std::optional<Theorem> theorem;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> lhs;  // absent when the hypothesis is unmet
  std::optional<double> rhs;
  std::optional<double> slack;
  std::optional<double> residual;  // identity records: relative residual
  BoundStatus status = BoundStatus::Holds;
};

struct RunSummary {
  int total = 0;
  int holds = 0;
  int violated = 0;
  int hypothesis_unmet = 0;
  double max_identity_residual = 0.0;
  std::optional<double> min_slack;
  std::chrono::duration<double> wall_time{0.0};
};

struct RunResult {
  std::vector<Record> records;
  RunSummary summary;
};

/// Runs the identity and bound grid described by `config` (validated first).
/// Records come back in deterministic order.
RunResult run_verify(const RunConfig& config);

/// 0 when nothing is violated and every identity residual is below
/// kIdentityThreshold, 1 otherwise.
int exit_status(const RunSummary& summary);

RunSummary summarize(const std::vector<Record>& records);
void sort_records(std::vector<Record>& records);

/// wall_time is left out so that identical configs give identical bytes.
std::string to_json(const RunConfig& config, const RunResult& result);
std::string to_csv(const RunResult& result);
std::string render(const RunConfig& config, const RunResult& result);

/// "%.17g", or "null" for an absent or non-finite value.
std::string format_real(std::optional<double> x);

}  // namespace abfrac
