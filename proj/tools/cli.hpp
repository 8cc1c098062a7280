#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatter/errors.hpp"
#include "scatter/vulnerability.hpp"

namespace scatter::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kNotRecognized = 3,
  kMismatch = 4,
};

/// 1-based, ascending.
nlohmann::json vertex_list(const VertexSet& s);

/// Structured report. Always carries n, m, chordal, strictly_chordal,
/// separators, toughness and scattering.
nlohmann::json report_document(const Graph& g, const VulnerabilityReport& report,
                               const StageTimings* timings);

/// Document for an input rejected by recognition, with the witness.
nlohmann::json failure_document(const Graph& g, const Error& error);

/// One-line description of a recognition failure including its witness.
std::string describe_failure(const Error& error);

std::string human_report(const Graph& g, const VulnerabilityReport& report,
                         const StageTimings* timings);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scatter::cli
