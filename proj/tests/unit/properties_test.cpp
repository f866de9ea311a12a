#include <gtest/gtest.h>

#include <random>

#include "boardwalk/agents.hpp"
#include "boardwalk/games/morris.hpp"
#include "boardwalk/registry.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace boardwalk;
using namespace boardwalk::testing;

namespace {

class EveryGame : public ::testing::TestWithParam<std::string> {};

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

TEST_P(EveryGame, LoopContractHoldsOverRandomPlayouts) {
  const auto game = create_game(GetParam());
  ContractOptions options;
  options.playouts = 60;
  options.seed = 11;
  const auto report = check_contract(*game, options);
  EXPECT_TRUE(report.ok()) << join(report.failures);
  EXPECT_EQ(report.playouts, 60);
  EXPECT_GT(report.moves, 0);
}

TEST_P(EveryGame, LegalMovesMatchTheOracle) {
  const auto game = create_game(GetParam());
  const auto report = check_agreement(*game, 60, 5);
  EXPECT_TRUE(report.ok()) << join(report.failures);
  EXPECT_EQ(report.states, 60);
}

TEST_P(EveryGame, OutOfRangeCoordinatesAreRejected) {
  const auto game = create_game(GetParam());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> wild(-3, 14);
  std::uniform_int_distribution<int> verb(0, 3);
  GameState state = game->initial_state();
  for (int step = 0; step < 40 && !game->game_finished(state); ++step) {
    const PlayerId p = state.current_player;
    for (int k = 0; k < 200; ++k) {
      Coord a{wild(rng), wild(rng)};
      Coord b{wild(rng), wild(rng)};
      if (a.row < game->rows() && a.col < game->cols() && a.row >= 0 && a.col >= 0) a.row = -1;
      Move m;
      switch (verb(rng)) {
        case 0: m = Place{game->piece_alphabet().front(), a}; break;
        case 1: m = PlacePair{b, a}; break;
        case 2: m = Slide{{b, a}, std::nullopt}; break;
        default: m = Slide{{a, b, b}, std::nullopt};
      }
      EXPECT_FALSE(game->validate_move(state, m, p)) << format_move(m);
    }
    advance(*game, state, agents::random_move(*game, state, rng));
  }
}

TEST_P(EveryGame, OnlyThePlayerToMoveMayMove) {
  const auto game = create_game(GetParam());
  std::mt19937_64 rng(8);
  GameState state = game->initial_state();
  for (int step = 0; step < 30 && !game->game_finished(state); ++step) {
    for (const auto& m : game->legal_moves(state)) {
      EXPECT_FALSE(game->validate_move(state, m, opponent(state.current_player)))
          << format_move(m);
    }
    advance(*game, state, agents::random_move(*game, state, rng));
  }
}

INSTANTIATE_TEST_SUITE_P(AllGames, EveryGame, ::testing::ValuesIn(game_ids()),
                         [](const auto& info) { return info.param; });

bool placing(const GameState& state) { return state.aux.at(0) + state.aux.at(1) > 0; }

TEST(PhaseGames, NeverEndDuringPlacement) {
  for (const char* id : {"morris", "kharebga"}) {
    const auto game = create_game(id);
    std::mt19937_64 rng(21);
    for (int playout = 0; playout < 300; ++playout) {
      GameState state = game->initial_state();
      while (placing(state)) {
        ASSERT_FALSE(game->game_finished(state)) << id;
        ASSERT_FALSE(game->get_winner(state).has_value()) << id;
        advance(*game, state, agents::random_move(*game, state, rng));
      }
    }
  }
}

TEST(Morris, RemovalFollowsMillClosure) {
  const auto game = create_game("morris");
  std::mt19937_64 rng(4);
  int removals = 0;
  for (int playout = 0; playout < 200; ++playout) {
    GameState state = game->initial_state();
    for (int step = 0; step < 300 && !game->game_finished(state); ++step) {
      const Move m = agents::random_move(*game, state, rng);
      GameState next = state;
      advance(*game, next, m);
      ASSERT_EQ(check_move_effect(*game, state, m, next), "") << format_move(m);
      const char enemy = games::Morris::symbol(opponent(state.current_player));
      removals += state.board.count(enemy) - next.board.count(enemy);
      state = std::move(next);
    }
  }
  EXPECT_GT(removals, 100);
}

TEST(Morris, PiecesOnBoardPlusHandNeverGrow) {
  const auto game = create_game("morris");
  std::mt19937_64 rng(6);
  for (int playout = 0; playout < 100; ++playout) {
    GameState state = game->initial_state();
    while (!game->game_finished(state) && state.round < 400) {
      advance(*game, state, agents::random_move(*game, state, rng));
      for (PlayerId p : {0, 1}) {
        const int total = state.board.count(games::Morris::symbol(p)) + state.aux[p];
        ASSERT_LE(total, games::Morris::kPieces);
        ASSERT_GE(state.aux[p], 0);
      }
    }
  }
}

}  // namespace
