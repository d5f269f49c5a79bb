#include "abfrac/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "abfrac/errors.hpp"

namespace abfrac {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

[[noreturn]] void bad(const std::string& field, const std::string& message) {
  throw ConfigError(field + ": " + message);
}

double parse_real(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) bad(field, "'" + text + "' is not a number");
  return value;
}

int parse_int(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) bad(field, "'" + text + "' is not an integer");
  return value;
}

std::pair<double, double> parse_colon_pair(const std::string& field, const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos) bad(field, "'" + text + "' must have the form x:y");
  return {parse_real(field, text.substr(0, pos)), parse_real(field, text.substr(pos + 1))};
}

}  // namespace

std::vector<double> parse_real_list(const std::string& field, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(field, item));
  if (out.empty()) bad(field, "empty list");
  return out;
}

std::vector<ConjugatePair> parse_pq_list(const std::string& field, const std::string& text) {
  std::vector<ConjugatePair> out;
  for (const auto& item : split(text, ',')) {
    const auto [p, q] = parse_colon_pair(field, item);
    out.push_back({p, q});
  }
  if (out.empty()) bad(field, "empty list");
  return out;
}

Interval parse_interval(const std::string& field, const std::string& text) {
  const auto [a, b] = parse_colon_pair(field, text);
  return {a, b};
}

Normalization parse_norm(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  if (t == "unit") return Normalization::unit();
  if (t == "ab") return Normalization::ab_standard();
  bad(field, "'" + text + "' must be 'unit' or 'ab'");
}

ReportFormat parse_format(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  if (t == "json") return ReportFormat::Json;
  if (t == "csv") return ReportFormat::Csv;
  bad(field, "'" + text + "' must be 'json' or 'csv'");
}

std::pair<Theorem, double> parse_rhs_scale(const std::string& field, const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos) bad(field, "'" + text + "' must have the form THEOREM:FACTOR");
  const auto theorem = parse_theorem(trim(text.substr(0, pos)));
  if (!theorem) bad(field, "unknown theorem '" + trim(text.substr(0, pos)) + "'");
  return {*theorem, parse_real(field, text.substr(pos + 1))};
}

std::string_view norm_name(const Normalization& norm) {
  return norm.kind() == Normalization::Kind::Unit ? "unit" : "ab";
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "functions") {
    config.functions = split(value, ',');
  } else if (key == "alphas") {
    config.alphas = parse_real_list(key, value);
  } else if (key == "pq") {
    config.pq_pairs = parse_pq_list(key, value);
  } else if (key == "theorems") {
    config.theorems.clear();
    for (const auto& name : split(value, ',')) {
      const auto t = parse_theorem(name);
      if (!t) bad(key, "unknown theorem '" + name + "'");
      config.theorems.push_back(*t);
    }
  } else if (key == "intervals") {
    config.intervals.clear();
    for (const auto& item : split(value, ',')) config.intervals.push_back(parse_interval(key, item));
  } else if (key == "norm") {
    config.norm = parse_norm(key, value);
  } else if (key == "format") {
    config.format = parse_format(key, value);
  } else if (key == "out") {
    config.output_path = trim(value);
  } else if (key == "rel_tol") {
    config.quad.rel_tol = parse_real(key, value);
  } else if (key == "abs_tol") {
    config.quad.abs_tol = parse_real(key, value);
  } else if (key == "max_depth") {
    config.quad.max_depth = parse_int(key, value);
  } else if (key == "nodes_per_panel") {
    config.quad.nodes_per_panel = parse_int(key, value);
  } else if (key == "rhs_scale") {
    config.rhs_scale.clear();
    for (const auto& item : split(value, ',')) config.rhs_scale.push_back(parse_rhs_scale(key, item));
  } else {
    bad(key, "unknown setting");
  }
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: " + path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

void RunConfig::validate() const {
  for (const auto& name : functions) {
    try {
      (void)lookup(name);
    } catch (const ConfigError& e) {
      bad("functions", e.what());
    }
  }
  if (alphas.empty()) bad("alphas", "empty list");
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) {
      std::ostringstream os;
      os << "value " << a << " outside (0, 1]";
      bad("alphas", os.str());
    }
  }
  for (const auto& pq : pq_pairs) {
    if (!(pq.p > 1.0 && pq.q > 1.0) || std::abs(1.0 / pq.p + 1.0 / pq.q - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "pair " << pq.p << ":" << pq.q << " is not conjugate (1/p + 1/q = 1, p, q > 1)";
      bad("pq", os.str());
    }
  }
  for (const auto& iv : intervals) {
    if (!(iv.lo < iv.hi)) {
      std::ostringstream os;
      os << "interval " << iv.lo << ":" << iv.hi << " needs a < b";
      bad("intervals", os.str());
    }
  }
  if (theorems.empty()) bad("theorems", "empty list");
  try {
    quad.validate();
  } catch (const DomainError& e) {
    bad("quad", e.what());
  }
}

}  // namespace abfrac
