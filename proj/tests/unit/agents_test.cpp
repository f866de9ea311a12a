#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "boardwalk/agents.hpp"
#include "boardwalk/registry.hpp"
#include "positions.hpp"

using namespace boardwalk;
using namespace boardwalk::agents;
using namespace boardwalk::testing;

namespace {

std::vector<std::string> transcript(const GameResult& result) {
  std::vector<std::string> out;
  for (const auto& [player, move] : result.move_log) {
    out.push_back(std::to_string(player) + " " + format_move(move));
  }
  return out;
}

GameResult random_match(const Game& game, std::uint64_t seed, int max_moves = 2000) {
  RandomAgent a(seed), b(seed + 1);
  std::vector<Agent*> agents{&a, &b};
  return play_match(game, agents, max_moves);
}

TEST(RandomAgent, SameSeedSameGame) {
  for (const auto& id : game_ids()) {
    const auto game = create_game(id);
    EXPECT_EQ(transcript(random_match(*game, 42)), transcript(random_match(*game, 42))) << id;
  }
}

TEST(RandomAgent, DifferentSeedsDiffer) {
  const auto game = create_game("reversi");
  EXPECT_NE(transcript(random_match(*game, 1)), transcript(random_match(*game, 2)));
}

TEST(RandomAgent, FirstMoveIsUniform) {
  // 10,000 first moves of Tic-Tac-Toe: each cell within 5 sigma of 1/9.
  const auto game = create_game("tictactoe");
  const auto state = game->initial_state();
  std::mt19937_64 rng(2024);
  std::map<std::string, int> counts;
  const int n = 10000;
  for (int i = 0; i < n; ++i) ++counts[format_move(random_move(*game, state, rng))];
  ASSERT_EQ(counts.size(), 9u);
  const double p = 1.0 / 9;
  const double sigma = std::sqrt(n * p * (1 - p));
  for (const auto& [text, count] : counts) EXPECT_LT(std::abs(count - n * p), 5 * sigma) << text;
}

TEST(RandomAgent, NoMoveIsAContractViolation) {
  const auto game = create_game("tictactoe");
  const auto won = after(*game, {"p A 0 0", "p V 1 0", "p A 0 1", "p V 1 1", "p A 0 2"});
  std::mt19937_64 rng(1);
  EXPECT_THROW(random_move(*game, won, rng), ContractViolation);
  RandomAgent agent(1);
  EXPECT_THROW(agent.next_move(*game, won, 1), ContractViolation);
}

TEST(FlatMonteCarlo, BlocksAnOpenLine) {
  // A threatens the top row; V must take (0,2).
  const auto game = create_game("tictactoe");
  const auto state = after(*game, {"p A 0 0", "p V 1 1", "p A 0 1"});
  int blocked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FlatMonteCarloAgent agent({AgentKind::flat_mc, seed, 2000, 1000});
    if (format_move(agent.choose(*game, state)) == "p V 0 2") ++blocked;
  }
  EXPECT_GE(blocked, 95);
}

TEST(FlatMonteCarlo, TakesAnImmediateWin) {
  const auto game = create_game("tictactoe");
  const auto state = after(*game, {"p A 0 0", "p V 1 0", "p A 0 1", "p V 1 1"});
  FlatMonteCarloAgent agent({AgentKind::flat_mc, 3, 2000, 1000});
  EXPECT_EQ(format_move(agent.choose(*game, state)), "p A 0 2");
}

TEST(FlatMonteCarlo, BudgetOneStillPlaysLegally) {
  for (const auto& id : game_ids()) {
    const auto game = create_game(id);
    FlatMonteCarloAgent agent({AgentKind::flat_mc, 9, 1, 50});
    const auto state = game->initial_state();
    const Move m = agent.choose(*game, state);
    EXPECT_TRUE(game->validate_move(state, m, state.current_player)) << id;
  }
}

TEST(FlatMonteCarlo, TiesGoToTheSmallestMoveText) {
  // One-move playouts from the empty board are all capped and score one half,
  // so every first move ties.
  const auto game = create_game("tictactoe");
  FlatMonteCarloAgent agent({AgentKind::flat_mc, 5, 9, 1});
  EXPECT_EQ(format_move(agent.choose(*game, game->initial_state())), "p A 0 0");
}

TEST(FlatMonteCarlo, Deterministic) {
  const auto game = create_game("reversi");
  FlatMonteCarloAgent a({AgentKind::flat_mc, 77, 300, 100});
  FlatMonteCarloAgent b({AgentKind::flat_mc, 77, 300, 100});
  GameState state = game->initial_state();
  for (int i = 0; i < 6; ++i) {
    const Move m = a.choose(*game, state);
    EXPECT_EQ(m, b.choose(*game, state));
    advance(*game, state, m);
  }
}

TEST(FlatMonteCarlo, RejectsBadConfig) {
  EXPECT_THROW(FlatMonteCarloAgent({AgentKind::flat_mc, 1, 0, 10}), std::invalid_argument);
  EXPECT_THROW(FlatMonteCarloAgent({AgentKind::flat_mc, 1, 10, 0}), std::invalid_argument);
}

TEST(FlatMonteCarlo, RarelyLosesToRandom) {
  const auto game = create_game("tictactoe");
  int losses = 0;
  const int matches = 40;
  for (int i = 0; i < matches; ++i) {
    FlatMonteCarloAgent mc({AgentKind::flat_mc, static_cast<std::uint64_t>(i), 2000, 1000});
    RandomAgent random(1000 + i);
    const PlayerId mc_seat = i % 2;
    std::vector<Agent*> agents{&mc, &random};
    if (mc_seat == 1) std::swap(agents[0], agents[1]);
    const auto result = play_match(*game, agents, 100);
    ASSERT_TRUE(result.terminal());
    if (result.winner && *result.winner != mc_seat) ++losses;
  }
  EXPECT_LE(losses, 2);
}

TEST(MakeAgent, BuildsTheRequestedKind) {
  EXPECT_NE(dynamic_cast<RandomAgent*>(make_agent({AgentKind::random, 1, 1, 1}).get()), nullptr);
  EXPECT_NE(dynamic_cast<FlatMonteCarloAgent*>(make_agent({AgentKind::flat_mc, 1, 10, 10}).get()),
            nullptr);
}

class SelfPlay : public ::testing::TestWithParam<std::string> {};

TEST_P(SelfPlay, RandomMatchesCompleteAndAgreeWithGetWinner) {
  const auto game = create_game(GetParam());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto result = random_match(*game, seed * 2);
    if (result.terminal()) {
      EXPECT_EQ(result.winner, game->get_winner(result.final_state));
      EXPECT_TRUE(game->game_finished(result.final_state));
    } else {
      EXPECT_EQ(result.status, LoopStatus::move_cap);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllGames, SelfPlay, ::testing::ValuesIn(game_ids()),
                         [](const auto& info) { return info.param; });

}  // namespace
