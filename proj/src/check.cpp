#include "scatter/check.hpp"

#include <random>
#include <vector>

#include "scatter/errors.hpp"
#include "scatter/oracle.hpp"

namespace scatter {

Analyzer analyze_default() {
  return [](const Graph& g) { return analyze(g); };
}

GenParams check_trial_params(std::uint64_t seed, std::size_t index, std::int32_t max_n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto draw = [&](std::int32_t lo, std::int32_t hi) {
    return std::uniform_int_distribution<std::int32_t>(lo, hi)(rng);
  };
  GenParams p;
  for (int attempt = 0; attempt < 64; ++attempt) {
    p.seed = rng();
    p.max_block_size = draw(2, 5);
    p.max_twins = draw(0, 3);
    p.block_count = draw(1, std::max(1, max_n / 2));
    if (generate_strictly_chordal(p).n() <= max_n) return p;
  }
  p.block_count = 1;
  p.max_block_size = 2;
  p.max_twins = 0;
  return p;
}

TrialOutcome compare_with_oracles(const Graph& g, const Analyzer& analyzer) {
  TrialOutcome out;
  out.graph = g;
  auto fail = [&](std::string why) {
    out.agree = false;
    out.detail = std::move(why);
    return out;
  };

  VulnerabilityReport report;
  try {
    report = analyzer(g);
  } catch (const std::exception& e) {
    return fail(std::string("analyze threw: ") + e.what());
  }
  out.kind = report.kind;

  OracleResults brute;
  try {
    brute = brute_force(g, {default_oracle_cap(), false});
  } catch (const CompleteGraph&) {
    if (report.kind != Case::Complete || report.scattering_number)
      return fail("oracle: complete graph, analyze: " + std::string(to_string(report.kind)));
    return out;
  }
  if (report.kind == Case::Complete || !report.scattering_number)
    return fail("analyze reported complete for a non-complete graph");

  const std::int64_t sc = *report.scattering_number;
  if (sc != brute.scattering.value)
    return fail("scattering number " + std::to_string(sc) + " != oracle " +
                std::to_string(brute.scattering.value));
  if (report.toughness != brute.toughness.value)
    return fail("toughness " + report.toughness.to_string() + " != oracle " +
                brute.toughness.value.to_string());
  const auto omega = static_cast<std::int64_t>(connected_components(g, report.scattering_set).count);
  if (omega - static_cast<std::int64_t>(report.scattering_set.size()) != sc)
    return fail("scattering set does not attain the reported value");

  const OracleResults fast = class_fast_oracle(g);
  if (fast.scattering.value != brute.scattering.value || fast.toughness.value != brute.toughness.value)
    return fail("class-restricted oracle disagrees with the full oracle");
  return out;
}

CheckSummary run_check(const CheckOptions& options, const Analyzer& analyzer) {
  const auto count = static_cast<std::int64_t>(options.count);
  std::vector<TrialOutcome> outcomes(options.count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const GenParams params = check_trial_params(options.seed, static_cast<std::size_t>(i), options.max_n);
    outcomes[i] = compare_with_oracles(generate_strictly_chordal(params), analyzer);
    outcomes[i].params = params;
  }

  CheckSummary summary;
  summary.total = options.count;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.kind) ++summary.case_counts[static_cast<std::size_t>(*o.kind)];
    if (o.agree) {
      ++summary.agreed;
    } else if (!summary.first_mismatch) {
      summary.first_mismatch = std::move(o);
      summary.first_mismatch_index = i;
    }
  }
  return summary;
}

}  // namespace scatter
