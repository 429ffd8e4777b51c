#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fourcycle/edge_io.hpp"
#include "fourcycle/generators.hpp"
#include "fourcycle/listing.hpp"
#include "test_util.hpp"

namespace fourcycle {
namespace {

using nlohmann::json;
using testutil::make_graph;

TEST(ParseEdgeList, SkipsCommentsAndBlankLines) {
  std::istringstream in(
      "# a square\n"
      "\n"
      "0 1\n"
      "   \n"
      "1 2\n"
      "# middle comment\n"
      "2 3\n"
      "3 0\n");
  const auto edges = parse_edge_list(in);
  ASSERT_EQ(edges.size(), 4u);
  EXPECT_EQ(edges[0], (EdgePair{0, 1}));
  EXPECT_EQ(edges[3], (EdgePair{3, 0}));
}

TEST(ParseEdgeList, ToleratesArbitraryWhitespace) {
  std::istringstream in("  0\t 1 \n\t2   3\t\n");
  const auto edges = parse_edge_list(in);
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edges[1], (EdgePair{2, 3}));
}

TEST(ParseEdgeList, RejectsMalformedLineWithLineNumber) {
  std::istringstream in("0 1\nnot an edge\n");
  try {
    parse_edge_list(in);
    FAIL() << "expected a parse error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(ParseEdgeList, RejectsMissingEndpoint) {
  std::istringstream in("7\n");
  EXPECT_THROW(parse_edge_list(in), std::runtime_error);
}

TEST(ParseEdgeList, RejectsTrailingJunk) {
  std::istringstream in("0 1 2\n");
  EXPECT_THROW(parse_edge_list(in), std::runtime_error);
}

TEST(ParseEdgeList, RejectsNegativeIds) {
  std::istringstream in("0 -1\n");
  EXPECT_THROW(parse_edge_list(in), std::runtime_error);
}

TEST(ParseEdgeList, RejectsOversizedIds) {
  std::istringstream in("0 4294967296\n");
  EXPECT_THROW(parse_edge_list(in), std::runtime_error);
}

TEST(ParseEdgeList, ReportsSelfLoopLine) {
  std::istringstream in("0 1\n1 2\n5 5\n");
  try {
    parse_edge_list(in);
    FAIL() << "expected a self-loop error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ReadEdgeList, MissingFileNamesPath) {
  try {
    read_edge_list("/nonexistent/edges.txt");
    FAIL() << "expected an I/O error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/edges.txt"), std::string::npos);
  }
}

TEST(WriteEdgeList, RoundTripsThroughParser) {
  const Graph g = gen_erdos_renyi(30, 80, 7);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  const Graph back = build_graph(parse_edge_list(in), g.vertex_count());
  ASSERT_EQ(back.vertex_count(), g.vertex_count());
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto a = g.neighbors(u);
    const auto b = back.neighbors(u);
    ASSERT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(WriteCycle, OneLinePerCycle) {
  std::ostringstream out;
  write_cycle(out, CanonicalCycle{0, 1, 2, 3});
  write_cycle(out, CanonicalCycle{4, 10, 6, 12});
  EXPECT_EQ(out.str(), "0 1 2 3\n4 10 6 12\n");
}

// --- subprocess tests against the real binary ---

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FOURCYCLE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("fourcycle_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_square() {
    const std::string p = path("square.txt");
    std::ofstream(p) << "0 1\n1 2\n2 3\n3 0\n";
    return p;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenThenCountRoundTrip) {
  const std::string edges = path("k33.txt");
  auto gen = run_cli("gen --family complete_bipartite -a 3 -b 3 -o " + edges);
  ASSERT_EQ(gen.exit_code, 0);
  auto count = run_cli("count -i " + edges + " --algo n2");
  EXPECT_EQ(count.exit_code, 0);
  EXPECT_EQ(count.out, "9\n");
}

TEST(CliNoFixture, HelpExitsZero) {
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("list --help").exit_code, 0);
}

TEST_F(CliTest, GenWritesParsableEdgeList) {
  const std::string edges = path("er.txt");
  ASSERT_EQ(run_cli("gen --family erdos_renyi -n 40 -m 100 --seed 3 -o " + edges).exit_code, 0);
  const Graph g = load_graph(edges);
  EXPECT_EQ(g.edge_count(), 100u);
}

TEST_F(CliTest, ListSortedSquare) {
  auto result = run_cli("list -i " + write_square() + " --algo n2 --sort");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out, "0 1 2 3\n");
}

TEST_F(CliTest, ListAlgosAgreeOnAdversary) {
  const std::string edges = path("adv.txt");
  ASSERT_EQ(run_cli("gen --family lhh_adversary -n 300 --eps 0.1 -o " + edges).exit_code, 0);
  auto a = run_cli("list -i " + edges + " --algo n2 --sort");
  auto b = run_cli("list -i " + edges + " --algo m43 --sort");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, CountBackendsAgreeViaCli) {
  const std::string edges = path("er.txt");
  ASSERT_EQ(run_cli("gen --family erdos_renyi -n 30 -m 90 --seed 11 -o " + edges).exit_code, 0);
  const std::string n2 = run_cli("count -i " + edges + " --algo n2").out;
  for (const char* algo : {"m43", "codegree", "trace", "brute"}) {
    EXPECT_EQ(run_cli("count -i " + edges + " --algo " + algo).out, n2) << algo;
  }
}

TEST_F(CliTest, DetectExitCodes) {
  EXPECT_EQ(run_cli("detect -i " + write_square()).exit_code, 0);
  const std::string star = path("star.txt");
  ASSERT_EQ(run_cli("gen --family star -n 50 -o " + star).exit_code, 0);
  auto none = run_cli("detect -i " + star);
  EXPECT_EQ(none.exit_code, 1);
  EXPECT_EQ(none.out, "none\n");
}

TEST_F(CliTest, ErrorsExitTwo) {
  EXPECT_EQ(run_cli("detect -i /nonexistent/file.txt").exit_code, 2);
  EXPECT_EQ(run_cli("gen --family no_such_family -n 5").exit_code, 2);
  EXPECT_EQ(run_cli("count -i " + write_square() + " --algo bogus").exit_code, 2);
  const std::string bad = path("bad.txt");
  std::ofstream(bad) << "0 1\noops\n";
  EXPECT_EQ(run_cli("count -i " + bad).exit_code, 2);
  EXPECT_EQ(run_cli("bogus_subcommand").exit_code, 2);
}

TEST_F(CliTest, VerifyPassesOnSmallGraph) {
  auto result = run_cli("verify -i " + write_square());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("result: PASS"), std::string::npos);
  EXPECT_EQ(result.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifySkipsOracleAboveLimit) {
  const std::string edges = path("er.txt");
  ASSERT_EQ(run_cli("gen --family erdos_renyi -n 200 -m 600 --seed 5 -o " + edges).exit_code, 0);
  auto capped = run_cli("verify -i " + edges + " --oracle-limit 64");
  EXPECT_EQ(capped.exit_code, 0);
  EXPECT_NE(capped.out.find("skipped"), std::string::npos);
  auto raised = run_cli("verify -i " + edges + " --oracle-limit 200");
  EXPECT_EQ(raised.exit_code, 0);
  EXPECT_EQ(raised.out.find("skipped"), std::string::npos);
}

TEST_F(CliTest, OracleLimitEnvVariable) {
  const std::string edges = path("er.txt");
  ASSERT_EQ(run_cli("gen --family erdos_renyi -n 80 -m 200 --seed 9 -o " + edges).exit_code, 0);
  auto blocked = run_cli("count -i " + edges + " --algo brute");
  EXPECT_EQ(blocked.exit_code, 2);  // default limit is 64
  ::setenv("FOURCYCLE_ORACLE_LIMIT", "100", 1);
  auto allowed = run_cli("count -i " + edges + " --algo brute");
  ::unsetenv("FOURCYCLE_ORACLE_LIMIT");
  EXPECT_EQ(allowed.exit_code, 0);
}

TEST_F(CliTest, StatsEmitsWellFormedJson) {
  const std::string edges = path("adv.txt");
  ASSERT_EQ(run_cli("gen --family lhh_adversary -n 1000 --eps 0.1 -o " + edges).exit_code, 0);
  auto result = run_cli("stats -i " + edges + " --seed 4 --retries 16");
  ASSERT_EQ(result.exit_code, 0);
  const json report = json::parse(result.out);
  EXPECT_EQ(report["t"], 0);
  EXPECT_EQ(report["two_paths"]["oriented_lhh"], 950);
  EXPECT_TRUE(report["spectral_floor_holds"].get<bool>());
  EXPECT_TRUE(report["lhh_theorem"]["holds"].get<bool>());
  EXPECT_TRUE(report["regular_partition"]["found"].get<bool>());
  EXPECT_GT(report["regular_partition"]["achieved_paths"].get<std::uint64_t>(), 0u);
}

TEST_F(CliTest, BenchEmitsRecordsAndSlope) {
  auto result = run_cli(
      "bench --family erdos_renyi --sizes 256,512 --repeats 3 --seed 2 --algo n2,m43");
  ASSERT_EQ(result.exit_code, 0);
  std::istringstream lines(result.out);
  std::string line;
  int records = 0;
  int slopes = 0;
  std::map<std::string, std::set<std::uint64_t>> t_by_key;
  while (std::getline(lines, line)) {
    const json row = json::parse(line);
    if (row.contains("slope")) {
      ++slopes;
      continue;
    }
    ++records;
    for (const char* field : {"family", "parameters", "n", "m", "algo", "t", "wall_time",
                              "useful_2path_count", "raw_candidates", "dedup_hits", "seed"}) {
      EXPECT_TRUE(row.contains(field)) << field;
    }
    EXPECT_GT(row["wall_time"].get<double>(), 0.0);
    t_by_key[row["algo"].get<std::string>() + "/" + row["parameters"].get<std::string>()]
        .insert(row["t"].get<std::uint64_t>());
  }
  EXPECT_EQ(records, 2 * 2 * 3);
  EXPECT_EQ(slopes, 2);
  for (const auto& [key, ts] : t_by_key) {
    EXPECT_EQ(ts.size(), 1u) << "t varied across repeats for " << key;
  }
}

}  // namespace
}  // namespace fourcycle
