#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cosmo/report.hpp"

namespace cosmo {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CheckPassesAndListsEveryClaim) {
  const Outcome r = run({"check", "--n-max", "4", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Table t = parse_json_report(r.out);
  ASSERT_EQ(t.rows.size(), 7u);
  for (const auto& row : t.rows) {
    EXPECT_EQ(std::get<bool>(row[3]), true) << std::get<std::string>(row[0]);
    EXPECT_GT(std::get<std::int64_t>(row[2]), 0) << std::get<std::string>(row[0]);
  }
  EXPECT_NE(r.err.find("# config"), std::string::npos);
}

TEST(Cli, CheckSuiteDirect) {
  const cli::CheckResult r = cli::run_check_suite(3, 3);
  EXPECT_TRUE(r.all_passed);
  EXPECT_EQ(r.table.columns.front(), "check");
}

TEST(Cli, SimulateRejectsBadProbability) {
  const Outcome r = run({"simulate", "--n", "10", "--p", "1.5"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("usage error"), std::string::npos);
}

TEST(Cli, UnknownFlagIsUsageError) {
  EXPECT_EQ(run({"simulate", "--n", "10", "--bogus", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"enumerate", "--n", "3", "--functional", "volume"}).code, cli::kExitUsage);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run({"--help"}).code, cli::kExitOk); }

TEST(Cli, BoundHolds) {
  const Outcome r = run({"bound", "--n", "4", "--p", "0.5", "--functional", "cosmo_edges", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Table t = parse_json_report(r.out);
  const std::vector<std::string> expected{"n", "p", "functional", "b1", "b2", "b3", "b4", "b5", "bound", "d_k", "holds"};
  EXPECT_EQ(t.columns, expected);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(std::get<bool>(t.rows[0][10]), true);
  EXPECT_LE(std::get<double>(t.rows[0][9]), std::get<double>(t.rows[0][8]));
}

TEST(Cli, EnumerateExactMean) {
  const Outcome r = run({"enumerate", "--n", "3", "--p", "1/2", "--functional", "cosmo_edges"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("39/4"), std::string::npos);
  EXPECT_NE(r.out.find(",true,"), std::string::npos);
}

TEST(Cli, EnumerateAtoms) {
  const Outcome r =
      run({"enumerate", "--n", "3", "--p", "1/2", "--functional", "leaves", "--atoms", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Table t = parse_json_report(r.out);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(std::get<Rational>(t.rows[1][4]), Rational(3, 4));
}

TEST(Cli, SimulateEmbedsConfig) {
  const Outcome r = run({"simulate", "--n", "30", "--p", "0.2", "--reps", "200", "--seed", "99", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Table t = parse_json_report(r.out);
  ASSERT_EQ(t.rows.size(), 1u);
  auto col = [&](const std::string& name) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      if (t.columns[j] == name) return t.rows[0][j];
    }
    ADD_FAILURE() << "missing column " << name;
    return Cell{};
  };
  EXPECT_EQ(std::get<std::int64_t>(col("seed")), 99);
  EXPECT_EQ(std::get<std::int64_t>(col("reps")), 200);
  EXPECT_EQ(std::get<std::int64_t>(col("n")), 30);
  EXPECT_EQ(std::get<std::string>(col("functional")), "cosmo_edges");
  EXPECT_NE(r.err.find("\"seed\":99"), std::string::npos) << r.err;

  const Outcome again = run({"simulate", "--n", "30", "--p", "0.2", "--reps", "200", "--seed", "99", "--format", "json"});
  const Table t2 = parse_json_report(again.out);
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    if (t.columns[j] == "wall_seconds") continue;
    EXPECT_TRUE(same_table(Table{{t.columns[j]}, {{t.rows[0][j]}}}, Table{{t2.columns[j]}, {{t2.rows[0][j]}}}))
        << t.columns[j];
  }
}

TEST(Cli, SweepSchema) {
  const Outcome r = run({"sweep", "--n", "32,64", "--p", "0.1", "--reps", "100"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find("\r\n")), "n,p,ks,clt_rate,ratio,functional,reps,seed,error");
}

TEST(Cli, SweepWithRule) {
  const Outcome r = run({"sweep", "--n", "64,128", "--p", "2*n^-0.5", "--reps", "50", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Table t = parse_json_report(r.out);
  EXPECT_DOUBLE_EQ(std::get<double>(t.rows[0][1]), 0.25);
}

TEST(Cli, UnwritableDestination) {
  const Outcome r = run({"enumerate", "--n", "2", "--p", "1/2", "--out", "/nonexistent/dir/out.csv"});
  EXPECT_EQ(r.code, cli::kExitFailure);
}

}  // namespace
}  // namespace cosmo
