#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "scatter/generator.hpp"
#include "scatter/vulnerability.hpp"

namespace scatter {

using Analyzer = std::function<VulnerabilityReport(const Graph&)>;

struct TrialOutcome {
  bool agree = true;
  std::string detail;
  Graph graph;
  GenParams params;
  std::optional<Case> kind;
};

struct CheckSummary {
  std::size_t total = 0;
  std::size_t agreed = 0;
  /// Indexed by Case.
  std::array<std::size_t, 5> case_counts{};
  /// Lowest-index disagreeing trial.
  std::optional<TrialOutcome> first_mismatch;
  std::size_t first_mismatch_index = 0;
};

struct CheckOptions {
  std::size_t count = 100;
  std::int32_t max_n = 12;
  std::uint64_t seed = 1;
};

/// Parameters of trial `index`: drawn from (seed, index), with the graph
/// regenerated until it has at most max_n vertices.
GenParams check_trial_params(std::uint64_t seed, std::size_t index, std::int32_t max_n);

/// Runs `analyzer` and both brute-force oracles on g. Agreement means equal
/// scattering number and toughness (or complete on both sides), a
/// self-witnessing scattering set, and a matching class-restricted oracle.
TrialOutcome compare_with_oracles(const Graph& g, const Analyzer& analyzer);

/// std::function wrapper around analyze() without timings.
Analyzer analyze_default();

/// Trials run in parallel; the summary is independent of scheduling.
CheckSummary run_check(const CheckOptions& options, const Analyzer& analyzer = analyze_default());

}  // namespace scatter
