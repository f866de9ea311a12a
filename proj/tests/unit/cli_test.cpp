#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "boardwalk/cli.hpp"
#include "json.hpp"

using boardwalk::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string trace(const std::string& name) { return std::string(TRACES_DIR) + "/" + name; }

TEST(Cli, ListsTwelveGames) {
  const auto r = invoke({"list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tictactoe 2 3x3\n"), std::string::npos);
  EXPECT_NE(r.out.find("pegsolitaire 1 7x7\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 12);
}

TEST(Cli, PerftPrintsOneNumber) {
  EXPECT_EQ(invoke({"perft", "chess", "3"}).out, "8902\n");
  EXPECT_EQ(invoke({"perft", "tictactoe", "2"}).out, "72\n");
  EXPECT_EQ(invoke({"perft", "chess", "7"}).code, 2);
  EXPECT_EQ(invoke({"perft", "go", "1"}).code, 3);
}

TEST(Cli, PlaysOnTheConsole) {
  const auto r = invoke({"play", "tictactoe", "--players", "h,h"},
                        "p A 0 0\np V 1 1\nbad\np A 0 1\np V 2 2\np A 0 2\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("invalid move"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 10), "winner: 0\n");
}

TEST(Cli, PlayWithAgentsAndIncompleteInput) {
  EXPECT_EQ(invoke({"play", "tictactoe", "--players", "r:1,mc:2:200"}).code, 0);
  EXPECT_EQ(invoke({"play", "tictactoe"}, "p A 0 0\n").code, 1);
  EXPECT_EQ(invoke({"play", "tictactoe", "--players", "h"}).code, 2);
  EXPECT_EQ(invoke({"play", "tictactoe", "--players", "h,x:1"}).code, 2);
  EXPECT_EQ(invoke({"play", "tron", "--players", "r:1,r:2", "--max-moves", "3"}).code, 1);
}

TEST(Cli, ReplayExitCodes) {
  EXPECT_EQ(invoke({"replay", "checkers", trace("forced_capture.trace")}).code, 0);
  const auto all = invoke({"replay", "all", TRACES_DIR});
  EXPECT_EQ(all.code, 0) << all.out << all.err;
  EXPECT_NE(all.out.find("verdict: perfect"), std::string::npos);
  EXPECT_EQ(invoke({"replay", "reversi", trace("forced_capture.trace")}).code, 3);
  EXPECT_EQ(invoke({"replay", "checkers", "/nonexistent.trace"}).code, 3);
  EXPECT_EQ(invoke({"replay", "nosuch", TRACES_DIR}).code, 3);
  EXPECT_EQ(invoke({"replay", "tictactoe", TRACES_DIR, "--candidate", ALWAYS_VALID_STUB}).code, 4);
  EXPECT_EQ(invoke({"replay", "tictactoe", TRACES_DIR, "--candidate", GARBLED_STUB}).code, 5);
}

TEST(Cli, ReplayWritesAJsonReport) {
  const auto path = std::filesystem::temp_directory_path() / "boardwalk_cli_report.json";
  const auto r = invoke({"replay", "tictactoe", trace("tictactoe_win.trace"), "--candidate",
                         ALWAYS_VALID_STUB, "--report", path.string(), "--json"});
  EXPECT_EQ(r.code, 4);
  const auto printed = nlohmann::json::parse(r.out);
  std::ifstream file(path);
  const auto written = nlohmann::json::parse(file);
  EXPECT_EQ(printed, written);
  EXPECT_EQ(written["verdict"], "erroneous");
}

TEST(Cli, CheckAgainstCandidates) {
  EXPECT_EQ(invoke({"check", "tictactoe", "--candidate", SHIM, "--seeds", "3"}).code, 0);
  EXPECT_EQ(invoke({"check", "tictactoe", "--candidate", ALWAYS_VALID_STUB}).code, 4);
  EXPECT_EQ(invoke({"check", "tictactoe", "--candidate", CRASH_STUB}).code, 5);
  EXPECT_EQ(invoke({"check", "tictactoe"}).code, 2);
  EXPECT_EQ(invoke({"check", "nosuch", "--candidate", SHIM}).code, 3);
}

TEST(Cli, SelfplayTalliesAndReproduces) {
  const auto a = invoke({"selfplay", "tictactoe", "--n", "30", "--seed", "4"});
  const auto b = invoke({"selfplay", "tictactoe", "--n", "30", "--seed", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("matches 30\n", 0), 0u);
  int total = 0;
  std::istringstream lines(a.out.substr(11));
  for (std::string line; std::getline(lines, line);) total += std::stoi(line.substr(line.rfind(' ')));
  EXPECT_EQ(total, 30);
  EXPECT_EQ(invoke({"selfplay", "tictactoe", "--players", "h,r:1"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"dance"}).code, 2);
  EXPECT_EQ(invoke({"perft", "chess"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, BinaryKeepsMachineOutputOnStdout) {
  const std::string command = std::string(CLI) + " perft tictactoe 3 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 64> buf{};
  std::string out;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  EXPECT_EQ(out, "504\n");
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(WEXITSTATUS(std::system((std::string(CLI) + " perft go 1 2>/dev/null").c_str())), 3);
}

}  // namespace
