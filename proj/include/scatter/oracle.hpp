#pragma once

#include <cstddef>
#include <cstdint>

#include "scatter/graph.hpp"
#include "scatter/rational.hpp"

namespace scatter {

/// Exponential reference computations straight from the definitions of
/// toughness and scattering number. Ground truth for small graphs.

template <class T>
struct OracleResult {
  T value{};
  /// Smallest bitmask (bit i = vertex i) attaining the optimum.
  VertexSet witness;
  std::uint64_t subsets_examined = 0;
};

struct OracleResults {
  OracleResult<std::int64_t> scattering;
  OracleResult<Rational> toughness;
};

struct OracleOptions {
  std::size_t cap = 20;
  bool parallel = true;
};

/// Cap from SCATTER_ORACLE_CAP if set, otherwise 20.
std::size_t default_oracle_cap();

/// Both invariants from one pass over all 2^n vertex subsets.
/// Throws TooLarge when n > cap and CompleteGraph for complete graphs.
OracleResults brute_force(const Graph& g, OracleOptions options = {});
OracleResult<std::int64_t> brute_force_scattering(const Graph& g, OracleOptions options = {});
OracleResult<Rational> brute_force_toughness(const Graph& g, OracleOptions options = {});

/// Strictly chordal graphs only: candidates restricted to unions of minimal
/// vertex separators (2^|S| of them). Throws TooLarge when the separator
/// count exceeds `separator_cap`.
OracleResults class_fast_oracle(const Graph& g, std::size_t separator_cap = 24);

/// Running optimum over a range of subset masks. `merge` is commutative and
/// associative, so any evaluation order reduces to the same result.
struct SubsetScan {
  bool has_sc = false;
  std::int64_t sc = 0;
  std::uint64_t sc_mask = 0;
  bool has_tau = false;
  std::int64_t tau_size = 0;
  std::int64_t tau_components = 1;
  std::uint64_t tau_mask = 0;
  std::uint64_t examined = 0;

  void offer(std::uint64_t mask, std::int64_t size, std::int64_t components);
  void merge(const SubsetScan& other);
};

/// Serial reference kernel over masks in [begin, end).
SubsetScan scan_subsets_serial(const Graph& g, std::uint64_t begin, std::uint64_t end);
/// OpenMP kernel over all 2^n masks.
SubsetScan scan_subsets_parallel(const Graph& g);

}  // namespace scatter
