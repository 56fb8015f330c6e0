#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rackbi {

struct RunConfig {
  std::string input;        // path, "catalog:NAME", or "dihedral:m"
  std::string command;      // validate | ideals | rack-check | star |
                            // cohomology | lp-check | report
  int degree_cap = 2;       // k of the degree-capped symmetric coalgebra
  int hbar_order = 4;       // deformation-parameter truncation order
  int filtration_cap = 3;   // enveloping-algebra word-length bound
  std::uint64_t seed = 0;   // seed for randomized property sampling
  bool parallel = false;    // run independent checks concurrently
  std::string output;       // where the caller writes the report (echo only)
};

/// One row of the report: a named property with its verdict.
struct CheckEntry {
  std::string name;
  bool pass = true;
  long long instances = 0;
  std::string counterexample;  // empty = none
  double wall_ms = 0.0;        // goes to the timing channel, not the report
};

struct RunResult {
  int exit_code = 0;   // 0 iff every check passed
  std::string report;  // JSON document; byte-stable for a fixed config
  std::string timing;  // one wall-time line per check, for stderr
};

/// Executes config.command on config.input. Throws Error{ParseError} on an
/// unknown command or caps < 1, and propagates ingestion errors. Failing
/// checks do not throw: they are recorded in the report with exit_code 1.
RunResult run(const RunConfig& config);

/// Renders the report document for a finished battery (run() uses this
/// internally). An empty battery renders as a pass with a warning flag.
/// Check entries carry a null wall-time field so that identical configs
/// yield byte-identical reports; measured times travel separately.
std::string emit_report(const RunConfig& config,
                        const std::vector<CheckEntry>& checks);

}  // namespace rackbi
