#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RSG_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const char* name) {
  return std::string(RSG_TEST_DATA) + "/" + name;
}

fs::path scratch(const char* name) {
  const auto dir = fs::temp_directory_path() / ("rsg_cli_" + std::string(name));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, Version) {
  const auto r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rsg "), std::string::npos);
}

TEST(Cli, SolveThreeLinear) {
  const auto r = run("solve " + data("three_linear.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "state 0 1 0\nresult NE=yes CE=yes iterations=0 phi_start=3 phi_end=3\n");
}

TEST(Cli, VerifyFull) {
  const auto r = run("verify " + data("three_linear.txt") + " " +
                     data("three_linear_state.txt") + " --full");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SSE no witness: move 2 0:0 2:1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("CE yes"), std::string::npos);
  EXPECT_NE(r.out.find("SE yes"), std::string::npos);
}

TEST(Cli, VerifyWithoutFullLeavesStrongUnknown) {
  const auto r = run("verify " + data("three_linear.txt") + " " +
                     data("three_linear_state.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SSE unknown"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("solve").code, 2);
  EXPECT_EQ(run("solve " + data("tampered.txt")).code, 2);
  EXPECT_EQ(run("solve /nonexistent/file").code, 2);
  EXPECT_EQ(run("gen-random --players 5 --resources 2 --delay-max 3").code, 2);
  const auto dir = scratch("codes");
  std::FILE* f = std::fopen((dir / "s.txt").c_str(), "w");
  std::fputs("state 0 5 0\n", f);
  std::fclose(f);
  EXPECT_EQ(run("verify " + data("three_linear.txt") + " " + (dir / "s.txt").string()).code, 2);
  f = std::fopen((dir / "bad_schedule.txt").c_str(), "w");
  std::fputs("move 1 7:0\n", f);
  std::fclose(f);
  EXPECT_EQ(run("dynamics " + data("three_linear.txt") + " " + data("three_linear_state.txt") +
                " --scheduler scripted:" + (dir / "bad_schedule.txt").string() +
                " --max-steps 5").code,
            3);
  f = std::fopen((dir / "rejected.txt").c_str(), "w");
  std::fputs("move 1 0:1\n", f);
  std::fclose(f);
  const auto rejected = run("dynamics " + data("three_linear.txt") + " " +
                            data("three_linear_state.txt") + " --scheduler scripted:" +
                            (dir / "rejected.txt").string() + " --max-steps 5");
  EXPECT_EQ(rejected.code, 3);
  EXPECT_NE(rejected.out.find("outcome invalid_move index=0"), std::string::npos)
      << rejected.out;
  const auto big = run("gen-random --players 8 --resources 4 --delay-max 80 "
                       "--graph cliques:8 --out " + (dir / "k8.txt").string());
  ASSERT_EQ(big.code, 0);
  f = std::fopen((dir / "s8.txt").c_str(), "w");
  std::fputs("state 0 1 2 3 0 1 2 3\n", f);
  std::fclose(f);
  const auto budget = run("verify " + (dir / "k8.txt").string() + " " +
                          (dir / "s8.txt").string() + " --full --budget-devs 3");
  EXPECT_NE(budget.out.find("unknown"), std::string::npos) << budget.out;
  const auto hard = run("dynamics " + (dir / "k8.txt").string() + " " +
                        (dir / "s8.txt").string() +
                        " --scheduler exhaustive --max-steps 5 --budget-devs 3");
  EXPECT_EQ(hard.code, 4) << hard.out;
  EXPECT_NE(hard.out.find("error budget"), std::string::npos) << hard.out;
}

TEST(Cli, GenRandomDeterministic) {
  const std::string args = "gen-random --players 6 --resources 3 --delay-max 40 "
                           "--graph gnp:0.5 --seed 7";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GenCycleAndScriptedDynamics) {
  const auto dir = scratch("cycle");
  const auto g = run("gen-cycle --out " + dir.string());
  ASSERT_EQ(g.code, 0) << g.out;
  for (const char* f : {"instance.txt", "state.txt", "schedule.txt", "manifest.txt"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const auto d = run("dynamics " + (dir / "instance.txt").string() + " " +
                     (dir / "state.txt").string() + " --scheduler scripted:" +
                     (dir / "schedule.txt").string() + " --max-steps 200 --trace-out " +
                     (dir / "trace.txt").string());
  EXPECT_EQ(d.code, 0) << d.out;
  EXPECT_EQ(d.out, "outcome cycle first_repeat=0 period=76\n");
}

TEST(Cli, DynamicsExhaustive) {
  const auto dir = scratch("dyn");
  std::FILE* f = std::fopen((dir / "s.txt").c_str(), "w");
  std::fputs("state 0 0 0\n", f);
  std::fclose(f);
  const auto r = run("dynamics " + data("three_linear.txt") + " " + (dir / "s.txt").string() +
                     " --scheduler exhaustive --max-steps 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("step 1 move"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("outcome converged_ce"), std::string::npos);
  EXPECT_EQ(run("dynamics " + data("three_linear.txt") + " " + (dir / "s.txt").string() +
                " --scheduler bogus --max-steps 10").code,
            2);
}
