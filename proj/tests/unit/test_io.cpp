#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "brute.hpp"
#include "rsg/cyclegen.hpp"
#include "rsg/error.hpp"
#include "rsg/io.hpp"

using namespace rsg;

namespace {
std::string data(const char* name) {
  return io::read_file(std::string(RSG_TEST_DATA) + "/" + name);
}
}  // namespace

TEST(Io, ThreeLinearRoundTrip) {
  const std::string text = data("three_linear.txt");
  const auto file = io::parse_instance(text);
  EXPECT_EQ(file.instance, GameInstance::linear(3, 2));
  EXPECT_EQ(io::format_instance(file.instance, file.graph), text);
  const State s = io::parse_state(data("three_linear_state.txt"), file.instance);
  EXPECT_EQ(s, (State{{0, 1, 0}}));
}

TEST(Io, TamperedTable) {
  try {
    io::parse_instance(data("tampered.txt"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("resource 1"), std::string::npos) << e.what();
  }
}

TEST(Io, MalformedLinesNameTheLine) {
  const char* bad[] = {
      "players 2\nresources 1\ndelay 0 1\n",
      "players 2\nresources 1\ndelay 0 1 2\nedge 0 0\n",
      "players 2\nresources x\n",
      "resources 1\n",
      "players 2\nresources 1\ndelay 0 1 2\nfoo\n",
      "players 2\nresources 1\ndelay 0 1 2\ndelay 0 1 2\n",
      "players 2\nresources 2\ndelay 0 1 2\n",
  };
  for (const char* text : bad) {
    EXPECT_THROW(io::parse_instance(text), Error) << text;
  }
  try {
    io::parse_instance("players 2\nresources 1\n# c\nbogus 3\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(Io, StateAndMoves) {
  const auto g = GameInstance::linear(3, 2);
  EXPECT_THROW(io::parse_state("state 0 1", g), Error);
  EXPECT_THROW(io::parse_state("state 0 1 2", g), Error);
  EXPECT_THROW(io::parse_state("stat 0 1 1"), ParseError);
  const Deviation d = io::parse_move("move 2 3:1 0:4");
  EXPECT_EQ(d.coalition, (PlayerSet{0, 3}));
  EXPECT_EQ(io::format_move(d), "move 2 0:4 3:1");
  EXPECT_THROW(io::parse_move("move 3 0:1 1:1"), ParseError);
  EXPECT_THROW(io::parse_move("move 1 0-1"), ParseError);
}

TEST(IoProperty, InstanceRoundTrip) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + rng() % 10, m = 1 + rng() % 5;
    const auto g = brute::random_game(rng, n, m, 1000);
    const auto graph = brute::random_graph(rng, n, 0.4);
    const std::string text = io::format_instance(g, graph);
    const auto back = io::parse_instance(text);
    ASSERT_EQ(back.instance, g);
    ASSERT_EQ(back.graph, graph);
    ASSERT_EQ(io::format_instance(back.instance, back.graph), text);
    const State s{brute::random_state(rng, n, m)};
    ASSERT_EQ(io::parse_state(io::format_state(s), g), s);
  }
}

TEST(Io, CycleFilesReparseAndCertify) {
  const auto c = cycle::build_cycle_instance();
  const auto file = io::parse_instance(io::format_instance(c.instance, c.graph));
  const State start = io::parse_state(io::format_state(c.start), file.instance);
  const auto schedule = io::parse_schedule(io::format_schedule(c.schedule));
  EXPECT_EQ(schedule, c.schedule);
  cycle::CycleConstruction again{file.instance, file.graph, start, schedule, 4};
  const auto cert = cycle::replay_and_certify(again, cycle::default_replay_steps());
  EXPECT_TRUE(cert.certified) << cert.diagnostic;
}
