#pragma once

// Registry of the acceptance checks. Each check measures one quantity and
// compares it with its expected value under a stated rule; the CLI `verify`
// command and the acceptance binary both report from here.

#include <string>
#include <vector>

#include "tspecial/io.hpp"

namespace tspecial::checks {

/// How `measured` is compared with `expected` and `tolerance`.
///   abs:    |measured - expected| <= tolerance
///   rel:    |measured - expected| <= tolerance |expected|
///   upper:  measured <= tolerance (expected is the ideal value, usually 0)
///   lower:  measured > tolerance
///   factor: expected / tolerance <= measured <= expected * tolerance
enum class Rule { abs, rel, upper, lower, factor };

struct CheckResult {
  std::string name;
  int criterion = 0;
  double expected = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  Rule rule = Rule::abs;
  bool pass = false;
  /// Set when the measurement itself threw; pass is then false.
  std::string error;
};

struct Criterion {
  int id = 0;
  std::string title;
};

/// The eighteen criteria in order.
const std::vector<Criterion>& criteria();

/// Runs the checks of one criterion. A check whose computation throws is
/// recorded as failed with the message; the others still run.
std::vector<CheckResult> run_criterion(int id);

/// All criteria, ordered by check name within each criterion.
std::vector<CheckResult> run_all();

bool evaluate(Rule rule, double expected, double measured, double tolerance);
const char* rule_name(Rule rule);

/// {schema_version, pass, checks: [{check_name, criterion, expected, measured, tolerance, rule, pass, error?}]}
io::Json report_json(const std::vector<CheckResult>& results);

}  // namespace tspecial::checks
