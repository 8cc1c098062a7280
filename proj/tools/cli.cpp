#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "scatter/check.hpp"
#include "scatter/chordal.hpp"
#include "scatter/generator.hpp"
#include "scatter/oracle.hpp"
#include "scatter/strictly_chordal.hpp"

namespace scatter::cli {

using nlohmann::json;

namespace {

struct AnalyzeArgs {
  std::string path;
  bool json = false;
  bool dump_cb = false;
  bool dump_clique_tree = false;
};

struct OracleArgs {
  std::string path;
  std::size_t cap = 0;
  bool class_fast = false;
  bool json = false;
};

struct CheckArgs {
  std::size_t count = 100;
  std::int32_t max_n = 12;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool inject_fault = false;
};

struct GenArgs {
  GenParams params;
  std::size_t target_n = 0;
  std::string output;
};

struct BenchArgs {
  std::vector<std::size_t> sizes{10000, 20000, 40000};
  std::uint64_t seed = 1;
  std::size_t repeat = 5;
  std::int32_t max_block = 4;
  std::int32_t max_twins = 2;
  bool json = false;
};

// Parse failures map to exit 2; anything else unreadable is a usage error.
int load(const std::string& path, Graph& g, std::ostream& err) {
  try {
    g = read_graph_file(path);
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << path << ": " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  Graph g;
  if (int rc = load(a.path, g, err)) return rc;
  if (g.duplicate_edges())
    err << "warning: collapsed " << g.duplicate_edges() << " duplicate edge(s)\n";

  StageTimings timings;
  VulnerabilityReport report;
  try {
    report = analyze(g, &timings);
  } catch (const Error& e) {
    err << describe_failure(e) << "\n";
    if (a.json) out << failure_document(g, e).dump(2) << "\n";
    return kNotRecognized;
  }

  if (a.dump_clique_tree || a.dump_cb) {
    const CliqueTree ct = build_clique_tree(g, mcs_order(g));
    if (a.dump_clique_tree) err << dump_clique_tree(ct);
    const auto seps = minimal_vertex_separators(ct);
    if (a.dump_cb && !seps.empty()) err << dump_cb(build_cb(ct, seps), ct, seps);
  }

  if (a.json)
    out << report_document(g, report, &timings).dump(2) << "\n";
  else
    out << human_report(g, report, &timings);
  return kOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  Graph g;
  if (int rc = load(a.path, g, err)) return rc;
  OracleResults res;
  try {
    if (a.class_fast)
      res = class_fast_oracle(g);
    else
      res = brute_force(g, {a.cap ? a.cap : default_oracle_cap(), true});
  } catch (const CompleteGraph&) {
    if (a.json)
      out << json{{"n", g.n()}, {"m", g.m()}, {"toughness", "infinite"}, {"scattering", "undefined"}}
                 .dump(2)
          << "\n";
    else
      out << "complete graph: toughness infinite, scattering number undefined\n";
    return kOk;
  } catch (const TooLarge& e) {
    err << "oracle: " << e.what() << " (raise with --cap or SCATTER_ORACLE_CAP)\n";
    return kUsage;
  } catch (const Error& e) {
    err << describe_failure(e) << "\n";
    return kNotRecognized;
  }
  const auto& t = res.toughness.value;
  if (a.json) {
    out << json{{"n", g.n()},
                {"m", g.m()},
                {"mode", a.class_fast ? "class_fast" : "exhaustive"},
                {"subsets_examined", res.scattering.subsets_examined},
                {"toughness", {{"num", t.num()}, {"den", t.den()}}},
                {"tough_set", vertex_list(res.toughness.witness)},
                {"scattering", {{"number", res.scattering.value},
                                {"set", vertex_list(res.scattering.witness)}}}}
               .dump(2)
        << "\n";
  } else {
    auto braces = [](const VertexSet& s) {
      std::string o = "{";
      for (Vertex v : s) o += (o.size() > 1 ? ", " : "") + std::to_string(v + 1);
      return o + "}";
    };
    out << "subsets examined    " << res.scattering.subsets_examined << "\n"
        << "toughness           " << t.to_string() << " " << braces(res.toughness.witness) << "\n"
        << "scattering number   " << res.scattering.value << " "
        << braces(res.scattering.witness) << "\n";
  }
  return kOk;
}

// Dispatch fault for the negative control: types A and B are sent down the
// tau >= 1 branch.
VulnerabilityReport faulty_analyze(const Graph& g) {
  VulnerabilityReport r = analyze(g);
  if (r.kind == Case::TypeA || r.kind == Case::TypeB) {
    auto wrong = scattering_tough_ge_1(r.separators);
    r.scattering_number = wrong.number;
    r.scattering_set = wrong.set;
  }
  return r;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (static_cast<std::size_t>(a.max_n) > default_oracle_cap()) {
    err << "check: --max-n " << a.max_n << " exceeds the oracle cap " << default_oracle_cap()
        << "\n";
    return kUsage;
  }
  const Analyzer analyzer = a.inject_fault ? Analyzer(faulty_analyze) : analyze_default();
  const CheckSummary s = run_check({a.count, a.max_n, a.seed}, analyzer);
  out << s.agreed << "/" << s.total << " agree\n";
  for (Case c : {Case::Complete, Case::SingleMvs, Case::ToughGe1, Case::TypeA, Case::TypeB})
    out << "  " << std::left << std::setw(12) << to_string(c) << s.case_counts[static_cast<int>(c)]
        << "\n";
  if (!s.first_mismatch) return kOk;

  const auto& m = *s.first_mismatch;
  const std::filesystem::path file = std::filesystem::path(a.out_dir) /
                                     ("counterexample_seed" + std::to_string(a.seed) + "_trial" +
                                      std::to_string(s.first_mismatch_index) + ".gr");
  std::ofstream f(file);
  f << "c check mismatch: " << m.detail << "\n"
    << "c generator seed " << m.params.seed << " blocks " << m.params.block_count
    << " max-block " << m.params.max_block_size << " max-twins " << m.params.max_twins << "\n"
    << serialize_dimacs(m.graph);
  err << "mismatch in trial " << s.first_mismatch_index << ": " << m.detail << "\n"
      << "counterexample written to " << file.string() << "\n";
  return kMismatch;
}

int cmd_gen(GenArgs a, std::ostream& out, std::ostream& err) {
  if (a.target_n) a.params.target_n = a.target_n;
  Graph g;
  try {
    g = generate_strictly_chordal(a.params);
  } catch (const std::invalid_argument& e) {
    err << "gen: " << e.what() << "\n";
    return kUsage;
  }
  const std::string text = serialize_dimacs(g);
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream f(a.output);
    if (!f) {
      err << "gen: cannot write " << a.output << "\n";
      return kUsage;
    }
    f << text;
  }
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  using Clock = std::chrono::steady_clock;
  json rows = json::array();
  if (!a.json)
    out << std::right << std::setw(10) << "n" << std::setw(12) << "m" << std::setw(14)
        << "median_ms" << std::setw(14) << "ns/(n+m)" << "\n";
  for (std::size_t size : a.sizes) {
    GenParams p;
    p.seed = a.seed;
    p.max_block_size = a.max_block;
    p.max_twins = a.max_twins;
    p.target_n = size;
    const Graph g = generate_strictly_chordal(p);
    std::vector<double> ns;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, a.repeat); ++r) {
      const auto start = Clock::now();
      const auto report = analyze(g);
      const auto stop = Clock::now();
      if (!report.scattering_number && report.kind != Case::Complete) return kMismatch;
      ns.push_back(static_cast<double>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    }
    std::sort(ns.begin(), ns.end());
    const double median = ns[ns.size() / 2];
    const double per_item = median / static_cast<double>(g.n() + g.m());
    if (a.json) {
      rows.push_back({{"target", size}, {"n", g.n()}, {"m", g.m()}, {"median_ns", median},
                      {"ns_per_item", per_item}});
    } else {
      out << std::setw(10) << g.n() << std::setw(12) << g.m() << std::setw(14) << std::fixed
          << std::setprecision(3) << median / 1e6 << std::setw(14) << std::setprecision(2)
          << per_item << "\n";
    }
  }
  if (a.json) out << rows.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toughness and scattering number of strictly chordal graphs"};
  app.name("scatter");
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a graph file");
  analyze_cmd->add_option("file", analyze_args.path, "Graph file")->required();
  analyze_cmd->add_flag("--json", analyze_args.json, "Structured output");
  analyze_cmd->add_flag("--dump-cb", analyze_args.dump_cb, "Dump CB(G) to stderr");
  analyze_cmd->add_flag("--dump-cliquetree", analyze_args.dump_clique_tree,
                        "Dump the clique tree to stderr");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force toughness and scattering number");
  oracle_cmd->add_option("file", oracle_args.path, "Graph file")->required();
  oracle_cmd->add_option("--cap", oracle_args.cap, "Maximum vertex count");
  oracle_cmd->add_flag("--class-fast", oracle_args.class_fast,
                       "Only unions of minimal separators (strictly chordal input)");
  oracle_cmd->add_flag("--json", oracle_args.json, "Structured output");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Compare analyze against the oracles");
  check_cmd->add_option("--count", check_args.count, "Number of generated graphs");
  check_cmd->add_option("--max-n", check_args.max_n, "Maximum vertex count");
  check_cmd->add_option("--seed", check_args.seed, "Seed");
  check_cmd->add_option("--out", check_args.out_dir, "Directory for counterexamples");
  check_cmd->add_flag("--inject-fault", check_args.inject_fault)->group("");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a strictly chordal graph");
  gen_cmd->add_option("--blocks", gen_args.params.block_count, "Number of blocks");
  gen_cmd->add_option("--max-block", gen_args.params.max_block_size, "Maximum block size");
  gen_cmd->add_option("--max-twins", gen_args.params.max_twins, "Maximum true twins per vertex");
  gen_cmd->add_option("--seed", gen_args.params.seed, "Seed");
  gen_cmd->add_option("--target-n", gen_args.target_n, "Approximate vertex count");
  gen_cmd->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time analyze() on generated graphs");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Target vertex counts")->delimiter(',');
  bench_cmd->add_option("--seed", bench_args.seed, "Seed");
  bench_cmd->add_option("--repeat", bench_args.repeat, "Runs per size (median reported)");
  bench_cmd->add_option("--max-block", bench_args.max_block, "Maximum block size");
  bench_cmd->add_option("--max-twins", bench_args.max_twins, "Maximum true twins per vertex");
  bench_cmd->add_flag("--json", bench_args.json, "Structured output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  if (*analyze_cmd) return cmd_analyze(analyze_args, out, err);
  if (*oracle_cmd) return cmd_oracle(oracle_args, out, err);
  if (*check_cmd) return cmd_check(check_args, out, err);
  if (*gen_cmd) return cmd_gen(gen_args, out, err);
  if (*bench_cmd) return cmd_bench(bench_args, out, err);
  return kUsage;
}

}  // namespace scatter::cli
