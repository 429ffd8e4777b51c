// Command-line front end. Subcommands: gen, list, count, detect, stats,
// verify, bench. Exit codes: 0 success (detect: cycle found), 1 detect
// found nothing / verify failed, 2 any error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fourcycle/fourcycle.hpp"

namespace {

using namespace fourcycle;
using nlohmann::json;

std::size_t default_oracle_limit() {
  if (const char* env = std::getenv("FOURCYCLE_ORACLE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring malformed FOURCYCLE_ORACLE_LIMIT='" << env << "'\n";
  }
  return kDefaultOracleLimit;
}

struct GenOptions {
  std::string family;
  std::string output;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t seed = 1;
  double eps = 0.1;
};

Graph generate(const GenOptions& opt) {
  if (opt.family == "star") return gen_star(opt.n);
  if (opt.family == "complete") return gen_complete(opt.n);
  if (opt.family == "complete_bipartite") return gen_complete_bipartite(opt.a, opt.b);
  if (opt.family == "cycle") return gen_cycle(opt.n);
  if (opt.family == "grid") return gen_grid(opt.rows, opt.cols);
  if (opt.family == "erdos_renyi") return gen_erdos_renyi(opt.n, opt.m, opt.seed);
  if (opt.family == "lhh_adversary") return gen_lhh_adversary(opt.n, opt.eps);
  throw std::invalid_argument(
      "unknown family '" + opt.family +
      "' (star, complete, complete_bipartite, cycle, grid, erdos_renyi, lhh_adversary)");
}

int run_gen(const GenOptions& opt) {
  const Graph g = generate(opt);
  if (opt.output.empty()) {
    write_edge_list(std::cout, g);
  } else {
    write_edge_list(opt.output, g);
  }
  std::cerr << "generated " << opt.family << ": n=" << g.vertex_count()
            << " m=" << g.edge_count() << '\n';
  return 0;
}

std::vector<CanonicalCycle> collect_cycles(const Graph& g, const std::string& algo,
                                           std::size_t oracle_limit) {
  std::vector<CanonicalCycle> cycles;
  if (algo == "n2") {
    list_n2(g, [&](const CanonicalCycle& c) { cycles.push_back(c); });
  } else if (algo == "m43") {
    list_m43(g, [&](const CanonicalCycle& c) { cycles.push_back(c); });
  } else if (algo == "brute") {
    const auto found = brute_force_list(g, oracle_limit);
    cycles.assign(found.begin(), found.end());
  } else {
    throw std::invalid_argument("unknown listing algo '" + algo + "' (n2, m43, brute)");
  }
  return cycles;
}

int run_list(const std::string& input, const std::string& algo, const std::string& output,
             bool sort_output, std::size_t oracle_limit) {
  const Graph g = load_graph(input);
  std::vector<CanonicalCycle> cycles = collect_cycles(g, algo, oracle_limit);
  if (sort_output) std::sort(cycles.begin(), cycles.end());
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw std::runtime_error("cannot open '" + output + "' for writing");
  }
  std::ostream& out = output.empty() ? std::cout : file;
  for (const CanonicalCycle& c : cycles) write_cycle(out, c);
  std::cerr << "listed " << cycles.size() << " cycles\n";
  return 0;
}

int run_count(const std::string& input, const std::string& algo, std::size_t oracle_limit) {
  const Graph g = load_graph(input);
  std::uint64_t t = 0;
  if (algo == "n2") {
    t = count(g, CountAlgo::N2);
  } else if (algo == "m43") {
    t = count(g, CountAlgo::M43);
  } else if (algo == "codegree") {
    t = count(g, CountAlgo::Codegree);
  } else if (algo == "trace") {
    t = count(g, CountAlgo::Trace);
  } else if (algo == "brute") {
    t = brute_force_list(g, oracle_limit).size();
  } else {
    throw std::invalid_argument("unknown counting algo '" + algo +
                                "' (n2, m43, codegree, trace, brute)");
  }
  std::cout << t << '\n';
  return 0;
}

int run_detect(const std::string& input) {
  const Graph g = load_graph(input);
  if (detect(g)) {
    std::cout << "found\n";
    return 0;
  }
  std::cout << "none\n";
  return 1;
}

json census_to_json(const TwoPathCensus& census) {
  const auto row = [&](int r) {
    return json{{"ll", census.by_class[r][0]},
                {"lh", census.by_class[r][1]},
                {"hh", census.by_class[r][2]}};
  };
  return json{{"total", census.total},
              {"oriented_lhh", census.oriented_lhh},
              {"l_center", row(0)},
              {"h_center", row(1)}};
}

int run_stats(const std::string& input, std::uint64_t seed, unsigned retries) {
  const Graph g = load_graph(input);
  const CensusReport report = build_census_report(g);
  const DegreePartition p = degree_partition(g);
  const RegularPartition rp = find_regular_partition(g, p, retries, seed);

  json out{
      {"n", report.n},
      {"m", report.m},
      {"t", report.t},
      {"high_vertices", p.high_vertices().size()},
      {"avg_degree",
       {{"num", report.avg_degree_num}, {"den", report.avg_degree_den}, {"value", report.avg_degree}}},
      {"two_paths", census_to_json(report.paths)},
      {"closed_4_walks", report.closed_4_walks},
      {"walk_budget", report.walk_budget},
      {"spectral_floor_holds", report.spectral_floor_ok},
      {"lhh_theorem",
       {{"oriented_paths", report.lhh.oriented_paths},
        {"cycles", report.lhh.cycles},
        {"threshold", static_cast<double>(report.lhh.threshold)},
        {"implied_floor", static_cast<double>(report.lhh.implied_floor)},
        {"condition_active", report.lhh.condition_active},
        {"holds", report.lhh.holds}}}};
  json partition{{"found", !rp.empty()},
                 {"target", static_cast<double>(rp.target)},
                 {"achieved_paths", rp.achieved_paths}};
  if (!rp.empty()) {
    partition["a_size"] = rp.a_side.size();
    partition["b_size"] = rp.b_side.size();
    partition["bucket"] = json::array({rp.bucket_in_log, rp.bucket_out_log});
    partition["min_in_degree"] = rp.min_in_degree;
    partition["min_out_degree"] = rp.min_out_degree;
  }
  out["regular_partition"] = partition;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_verify(const std::string& input, std::size_t oracle_limit) {
  const Graph g = load_graph(input);
  bool ok = true;
  const auto check = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << "check " << name << ": " << (pass ? "pass" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    ok = ok && pass;
  };

  std::set<CanonicalCycle> from_n2;
  std::set<CanonicalCycle> from_m43;
  list_n2(g, [&](const CanonicalCycle& c) { from_n2.insert(c); });
  list_m43(g, [&](const CanonicalCycle& c) { from_m43.insert(c); });
  const std::uint64_t t = from_n2.size();
  check("list_n2 = list_m43", from_n2 == from_m43, "t=" + std::to_string(t));

  const std::uint64_t by_codegree = count_codegree(g);
  const std::uint64_t by_trace = trace_count(g);
  check("codegree = trace = t", by_codegree == t && by_trace == t,
        "codegree=" + std::to_string(by_codegree) + " trace=" + std::to_string(by_trace));

  if (g.vertex_count() <= oracle_limit) {
    check("brute-force cycle set", brute_force_list(g, oracle_limit) == from_n2, "");
    const DegreePartition p = degree_partition(g);
    bool paths_ok = true;
    for (const PathClass cls : {PathClass::HHH, PathClass::LCenter, PathClass::OrientedLHH}) {
      std::set<TwoPath> stream;
      const auto grab = [&](const TwoPath& tp) { stream.insert(tp); };
      if (cls == PathClass::HHH) enum_hhh_paths(g, p, grab);
      if (cls == PathClass::LCenter) enum_lcenter_paths(g, p, grab);
      if (cls == PathClass::OrientedLHH) enum_oriented_lhh_paths(g, p, grab);
      paths_ok = paths_ok && stream == brute_force_two_paths(g, cls, oracle_limit);
    }
    check("2-path enumerators vs brute force", paths_ok, "");
  } else {
    std::cout << "check brute-force oracle: skipped (n=" << g.vertex_count()
              << " exceeds oracle limit " << oracle_limit << ")\n";
  }

  std::cout << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

Graph bench_instance(const std::string& family, std::uint64_t size, std::uint64_t seed,
                     std::string* parameters) {
  std::ostringstream desc;
  if (family == "erdos_renyi") {
    desc << "n=" << size << " m=" << size;
    *parameters = desc.str();
    return gen_erdos_renyi(size, size, seed);
  }
  if (family == "star") {
    desc << "n=" << size;
    *parameters = desc.str();
    return gen_star(size);
  }
  if (family == "lhh_adversary") {
    desc << "n=" << size << " eps=0.1";
    *parameters = desc.str();
    return gen_lhh_adversary(size, 0.1);
  }
  throw std::invalid_argument("bench: unsupported family '" + family +
                              "' (erdos_renyi, star, lhh_adversary)");
}

int run_bench(const std::string& family, const std::vector<std::uint64_t>& sizes,
              unsigned repeats, std::uint64_t seed, const std::vector<std::string>& algos) {
  if (sizes.empty()) throw std::invalid_argument("bench: --sizes is empty");
  if (repeats == 0) throw std::invalid_argument("bench: --repeats must be positive");
  for (const std::string& algo : algos) {
    std::vector<std::pair<double, double>> points;
    for (const std::uint64_t size : sizes) {
      std::string parameters;
      const Graph g = bench_instance(family, size, seed, &parameters);
      std::vector<double> times;
      for (unsigned r = 0; r < repeats; ++r) {
        BenchRecord rec = bench_listing(g, algo);
        rec.family = family;
        rec.parameters = parameters;
        rec.seed = seed;
        times.push_back(rec.wall_time);
        const json line{{"family", rec.family},     {"parameters", rec.parameters},
                        {"n", rec.n},               {"m", rec.m},
                        {"algo", rec.algo},         {"t", rec.t},
                        {"wall_time", rec.wall_time},
                        {"useful_2path_count", rec.useful_2path_count},
                        {"raw_candidates", rec.raw_candidates},
                        {"dedup_hits", rec.dedup_hits},
                        {"seed", rec.seed}};
        std::cout << line.dump() << '\n';
      }
      std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
      points.push_back({static_cast<double>(size), times[times.size() / 2]});
    }
    if (points.size() >= 2) {
      const json fit{{"algo", algo},
                     {"slope", fit_loglog_slope(points)},
                     {"metric", "wall_time_vs_size"},
                     {"points", points.size()}};
      std::cout << fit.dump() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4-cycle listing, counting, detection and diagnostics"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph family to an edge list");
  gen->add_option("--family", gen_opt.family, "family name")->required();
  gen->add_option("-n,--n", gen_opt.n, "vertex parameter");
  gen->add_option("-m,--m", gen_opt.m, "edge parameter (erdos_renyi)");
  gen->add_option("-a,--a", gen_opt.a, "first side (complete_bipartite)");
  gen->add_option("-b,--b", gen_opt.b, "second side (complete_bipartite)");
  gen->add_option("--rows", gen_opt.rows, "grid rows");
  gen->add_option("--cols", gen_opt.cols, "grid columns");
  gen->add_option("--seed", gen_opt.seed, "random seed");
  gen->add_option("--eps", gen_opt.eps, "adversary exponent offset in (0, 1/3)");
  gen->add_option("-o,--output", gen_opt.output, "output path (default stdout)");

  std::string in_path;
  std::string out_path;
  std::string algo = "m43";
  bool sort_output = false;
  std::size_t oracle_limit = default_oracle_limit();
  std::uint64_t seed = 1;
  unsigned retries = 32;

  CLI::App* list = app.add_subcommand("list", "list all 4-cycles, one per line");
  list->add_option("-i,--input", in_path, "edge-list file")->required();
  list->add_option("-o,--output", out_path, "output path (default stdout)");
  list->add_option("--algo", algo, "n2, m43 or brute");
  list->add_flag("--sort", sort_output, "sort output lexicographically");
  list->add_option("--oracle-limit", oracle_limit, "max n for brute");

  CLI::App* count_cmd = app.add_subcommand("count", "count 4-cycles");
  count_cmd->add_option("-i,--input", in_path, "edge-list file")->required();
  count_cmd->add_option("--algo", algo, "n2, m43, codegree, trace or brute");
  count_cmd->add_option("--oracle-limit", oracle_limit, "max n for brute");

  CLI::App* detect_cmd = app.add_subcommand("detect", "exit 0 iff a 4-cycle exists");
  detect_cmd->add_option("-i,--input", in_path, "edge-list file")->required();

  CLI::App* stats = app.add_subcommand("stats", "census, walk and theorem diagnostics");
  stats->add_option("-i,--input", in_path, "edge-list file")->required();
  stats->add_option("--seed", seed, "seed for the partition search");
  stats->add_option("--retries", retries, "partition search attempts");

  CLI::App* verify = app.add_subcommand("verify", "cross-check all backends");
  verify->add_option("-i,--input", in_path, "edge-list file")->required();
  verify->add_option("--oracle-limit", oracle_limit, "max n for brute checks");

  std::string bench_family = "erdos_renyi";
  std::vector<std::uint64_t> bench_sizes;
  std::vector<std::string> bench_algos{"n2", "m43"};
  unsigned repeats = 3;
  CLI::App* bench = app.add_subcommand("bench", "timed runs with structured records");
  bench->add_option("--family", bench_family, "erdos_renyi, star or lhh_adversary");
  bench->add_option("--sizes", bench_sizes, "comma-separated instance sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--repeats", repeats, "timing repeats per instance");
  bench->add_option("--seed", seed, "instance seed");
  bench->add_option("--algo", bench_algos, "comma-separated algos to time")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(gen)) return run_gen(gen_opt);
    if (app.got_subcommand(list)) return run_list(in_path, algo, out_path, sort_output, oracle_limit);
    if (app.got_subcommand(count_cmd)) return run_count(in_path, algo, oracle_limit);
    if (app.got_subcommand(detect_cmd)) return run_detect(in_path);
    if (app.got_subcommand(stats)) return run_stats(in_path, seed, retries);
    if (app.got_subcommand(verify)) return run_verify(in_path, oracle_limit);
    if (app.got_subcommand(bench)) return run_bench(bench_family, bench_sizes, repeats, seed, bench_algos);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
