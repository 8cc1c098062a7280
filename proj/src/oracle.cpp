#include "scatter/oracle.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "scatter/chordal.hpp"
#include "scatter/errors.hpp"

namespace scatter {

namespace {

constexpr std::size_t kMaskBits = 62;

// omega(G - S) for S given as a bitmask, by union-find over the kept edges.
class MaskComponents {
 public:
  explicit MaskComponents(const Graph& g) : n_(g.n()), edges_(g.edges()) {}

  std::int64_t count(std::uint64_t removed) const {
    std::array<std::int32_t, 64> parent{};
    std::int64_t components = 0;
    for (std::int32_t v = 0; v < n_; ++v) {
      parent[v] = v;
      if (!(removed >> v & 1)) ++components;
    }
    auto find = [&](std::int32_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (auto [u, v] : edges_) {
      if ((removed >> u & 1) || (removed >> v & 1)) continue;
      const auto a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components;
  }

 private:
  std::int32_t n_;
  std::vector<Edge> edges_;
};

VertexSet mask_to_set(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return VertexSet::from_sorted(std::move(out));
}

OracleResults finish(const SubsetScan& scan) {
  OracleResults out;
  out.scattering.value = scan.sc;
  out.scattering.witness = mask_to_set(scan.sc_mask);
  out.scattering.subsets_examined = scan.examined;
  out.toughness.value = Rational(scan.tau_size, scan.tau_components);
  out.toughness.witness = mask_to_set(scan.tau_mask);
  out.toughness.subsets_examined = scan.examined;
  return out;
}

}  // namespace

void SubsetScan::offer(std::uint64_t mask, std::int64_t size, std::int64_t components) {
  ++examined;
  if (components != 1) {
    const std::int64_t value = components - size;
    if (!has_sc || value > sc || (value == sc && mask < sc_mask)) {
      has_sc = true;
      sc = value;
      sc_mask = mask;
    }
  }
  if (components > 1) {
    const __int128 lhs = static_cast<__int128>(size) * tau_components;
    const __int128 rhs = static_cast<__int128>(tau_size) * components;
    if (!has_tau || lhs < rhs || (lhs == rhs && mask < tau_mask)) {
      has_tau = true;
      tau_size = size;
      tau_components = components;
      tau_mask = mask;
    }
  }
}

void SubsetScan::merge(const SubsetScan& other) {
  examined += other.examined;
  if (other.has_sc &&
      (!has_sc || other.sc > sc || (other.sc == sc && other.sc_mask < sc_mask))) {
    has_sc = true;
    sc = other.sc;
    sc_mask = other.sc_mask;
  }
  if (other.has_tau) {
    const __int128 lhs = static_cast<__int128>(other.tau_size) * tau_components;
    const __int128 rhs = static_cast<__int128>(tau_size) * other.tau_components;
    if (!has_tau || lhs < rhs || (lhs == rhs && other.tau_mask < tau_mask)) {
      has_tau = true;
      tau_size = other.tau_size;
      tau_components = other.tau_components;
      tau_mask = other.tau_mask;
    }
  }
}

SubsetScan scan_subsets_serial(const Graph& g, std::uint64_t begin, std::uint64_t end) {
  const MaskComponents omega(g);
  SubsetScan scan;
  for (std::uint64_t mask = begin; mask < end; ++mask)
    scan.offer(mask, std::popcount(mask), omega.count(mask));
  return scan;
}

SubsetScan scan_subsets_parallel(const Graph& g) {
  const MaskComponents omega(g);
  const std::int64_t total = std::int64_t{1} << g.n();
  SubsetScan result;
#pragma omp parallel
  {
    SubsetScan local;
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      const auto m = static_cast<std::uint64_t>(mask);
      local.offer(m, std::popcount(m), omega.count(m));
    }
#pragma omp critical
    result.merge(local);
  }
  return result;
}

std::size_t default_oracle_cap() {
  if (const char* env = std::getenv("SCATTER_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return 20;
}

OracleResults brute_force(const Graph& g, OracleOptions options) {
  const auto n = static_cast<std::size_t>(g.n());
  if (n > options.cap || n > kMaskBits) throw TooLarge(n, std::min(options.cap, kMaskBits));
  if (g.is_complete()) throw CompleteGraph();
  const SubsetScan scan = options.parallel
                              ? scan_subsets_parallel(g)
                              : scan_subsets_serial(g, 0, std::uint64_t{1} << n);
  return finish(scan);
}

OracleResult<std::int64_t> brute_force_scattering(const Graph& g, OracleOptions options) {
  return brute_force(g, options).scattering;
}

OracleResult<Rational> brute_force_toughness(const Graph& g, OracleOptions options) {
  return brute_force(g, options).toughness;
}

OracleResults class_fast_oracle(const Graph& g, std::size_t separator_cap) {
  if (g.is_complete()) throw CompleteGraph();
  const auto seps = minimal_vertex_separators(build_clique_tree(g, mcs_order(g)));
  if (seps.size() > separator_cap || seps.size() > kMaskBits)
    throw TooLarge(seps.size(), std::min(separator_cap, kMaskBits));

  // Same tie-breaking as the full scan, but on separator-index masks.
  SubsetScan scan;
  std::vector<char> removed(g.n(), 0);
  const std::uint64_t total = std::uint64_t{1} << seps.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(removed.begin(), removed.end(), 0);
    std::int64_t size = 0;
    for (std::size_t s = 0; s < seps.size(); ++s)
      if (mask >> s & 1)
        for (Vertex v : seps[s].vertices) {
          removed[v] = 1;
          ++size;
        }
    scan.offer(mask, size, static_cast<std::int64_t>(connected_components(g, removed).count));
  }

  auto union_of = [&](std::uint64_t mask) {
    std::vector<Vertex> members;
    for (std::size_t s = 0; s < seps.size(); ++s)
      if (mask >> s & 1) members.insert(members.end(), seps[s].vertices.begin(), seps[s].vertices.end());
    return VertexSet(std::move(members));
  };
  OracleResults out;
  out.scattering = {scan.sc, union_of(scan.sc_mask), scan.examined};
  out.toughness = {Rational(scan.tau_size, scan.tau_components), union_of(scan.tau_mask),
                   scan.examined};
  return out;
}

}  // namespace scatter
