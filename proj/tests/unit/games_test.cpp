#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "boardwalk/games/chess.hpp"
#include "boardwalk/games/checkers.hpp"
#include "boardwalk/games/morris.hpp"
#include "boardwalk/games/unashogi.hpp"
#include "boardwalk/harness/perft.hpp"
#include "boardwalk/registry.hpp"
#include "positions.hpp"

namespace boardwalk {
namespace {

using testing::accepts;
using testing::after;
using testing::position;

TEST(Registry, TwelveGamesInStableOrder) {
  const std::vector<std::string> expected{"tictactoe", "pegsolitaire", "reversi", "morris",
                                          "checkers",  "chess",        "ardri",   "domineering",
                                          "tron",      "amazons",      "kharebga", "unashogi"};
  EXPECT_EQ(game_ids(), expected);
  for (const auto& id : expected) EXPECT_EQ(create_game(id)->id(), id);
  EXPECT_THROW(create_game("go"), UnknownGame);
}

TEST(Registry, InitialSetups) {
  EXPECT_EQ(create_game("reversi")->initial_state().board.count('_'), 60);
  EXPECT_EQ(create_game("pegsolitaire")->initial_state().board.count('P'), 32);
  EXPECT_EQ(create_game("morris")->initial_state().board.count('_'), 24);
  EXPECT_EQ(create_game("checkers")->initial_state().board.count('C'), 12);
  EXPECT_EQ(create_game("checkers")->initial_state().board.count('c'), 12);
  EXPECT_EQ(create_game("ardri")->initial_state().board.count('A'), 16);
  EXPECT_EQ(create_game("ardri")->initial_state().board.count('d'), 8);
  EXPECT_EQ(create_game("unashogi")->initial_state().board.count('_'), 79);
  EXPECT_EQ(create_game("kharebga")->initial_state().board.count('_'), 25);
  for (const auto& id : game_ids()) {
    const auto game = create_game(id);
    const GameState s = game->initial_state();
    EXPECT_EQ(s.round, 0) << id;
    EXPECT_EQ(s.current_player, 0) << id;
    EXPECT_EQ(s.board.rows(), game->rows()) << id;
    EXPECT_EQ(s.board.cols(), game->cols()) << id;
    EXPECT_FALSE(game->game_finished(s)) << id;
  }
}

// ---------------------------------------------------------------- tictactoe

TEST(TicTacToe, NoMoveAfterALine) {
  const auto game = create_game("tictactoe");
  const GameState s = position(*game, {"AAA", "VV_", "___"}, 1);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(0));
  EXPECT_FALSE(accepts(*game, s, "p V 1 2"));
  EXPECT_TRUE(game->legal_moves(s).empty());
}

TEST(TicTacToe, DiagonalWinForSecondPlayer) {
  const auto game = create_game("tictactoe");
  const GameState s = position(*game, {"AAV", "AV_", "V__"}, 0);
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(1));
}

// ------------------------------------------------------------- pegsolitaire

TEST(PegSolitaire, SinglePegWins) {
  const auto game = create_game("pegsolitaire");
  const GameState s = position(
      *game, {"..___..", "..___..", "_______", "___P___", "_______", "..___..", "..___.."}, 0);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(0));
}

TEST(PegSolitaire, StuckWithTwoPegsHasNoWinner) {
  const auto game = create_game("pegsolitaire");
  const GameState s = position(
      *game, {"..P__..", "..___..", "_______", "___P___", "_______", "..___..", "..___.."}, 0);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_FALSE(game->get_winner(s).has_value());
}

TEST(PegSolitaire, JumpRemovesThePeg) {
  const auto game = create_game("pegsolitaire");
  const GameState s = after(*game, {"m 3 1 3 3"});
  EXPECT_TRUE(s.board.is_empty({3, 1}));
  EXPECT_TRUE(s.board.is_empty({3, 2}));
  EXPECT_EQ(s.board.symbol({3, 3}), 'P');
  EXPECT_EQ(s.current_player, 0);
}

// ------------------------------------------------------------------ reversi

TEST(Reversi, FlipsInEveryFlankedDirection) {
  const auto game = create_game("reversi");
  GameState s = position(*game,
                         {"________", "________", "__AAA___", "__AVA___", "__AVV___", "__A_____",
                          "________", "________"},
                         0);
  // Upwards (4,3),(3,3) are flanked by (2,3); the diagonal through (4,4) ends on an empty cell.
  ASSERT_TRUE(accepts(*game, s, "p A 5 3"));
  apply_move(*game, s, parse_move("p A 5 3"));
  EXPECT_EQ(s.board.symbol({4, 3}), 'A');
  EXPECT_EQ(s.board.symbol({3, 3}), 'A');
  EXPECT_EQ(s.board.symbol({4, 4}), 'V');
}

TEST(Reversi, PassOnlyWithoutPlacement) {
  const auto game = create_game("reversi");
  EXPECT_FALSE(accepts(*game, game->initial_state(), "x"));
  // V (to move) has no placement, A does.
  GameState s = position(*game,
                         {"AAAAAAAA", "AAAAAAAA", "AAAAAAAA", "AAAAAAAA", "AAAAAAAA", "AAAAAAAA",
                          "AAAAAAVV", "AAAAAA__"},
                         1);
  EXPECT_FALSE(game->game_finished(s));
  EXPECT_TRUE(accepts(*game, s, "x"));
  EXPECT_EQ(game->legal_moves(s).size(), 1u);
  advance(*game, s, Pass{});
  EXPECT_EQ(s.current_player, 0);
  EXPECT_EQ(s.round, 1);
}

TEST(Reversi, EndsWhenNeitherCanPlaceAndCountsDiscs) {
  const auto game = create_game("reversi");
  const GameState s = position(*game,
                               {"AAAAAAAA", "AAAAAAAA", "AAAAAAAA", "AAAAAAAA", "________",
                                "________", "________", "________"},
                               0);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(0));
  const GameState tie = position(*game,
                                 {"AAAAAAAA", "AAAAAAAA", "AAAAAAAA", "AAAAAAAA", "VVVVVVVV",
                                  "VVVVVVVV", "VVVVVVVV", "VVVVVVVV"},
                                 0);
  EXPECT_TRUE(game->game_finished(tie));
  EXPECT_FALSE(game->get_winner(tie).has_value());
}

// ------------------------------------------------------------------- morris

// The standard mill board, written out by hand.
const std::set<std::pair<Coord, Coord>>& mill_board_edges() {
  static const std::set<std::pair<Coord, Coord>> edges = [] {
    const std::vector<std::pair<Coord, Coord>> list{
        {{0, 0}, {0, 3}}, {{0, 3}, {0, 6}}, {{1, 1}, {1, 3}}, {{1, 3}, {1, 5}},
        {{2, 2}, {2, 3}}, {{2, 3}, {2, 4}}, {{3, 0}, {3, 1}}, {{3, 1}, {3, 2}},
        {{3, 4}, {3, 5}}, {{3, 5}, {3, 6}}, {{4, 2}, {4, 3}}, {{4, 3}, {4, 4}},
        {{5, 1}, {5, 3}}, {{5, 3}, {5, 5}}, {{6, 0}, {6, 3}}, {{6, 3}, {6, 6}},
        {{0, 0}, {3, 0}}, {{3, 0}, {6, 0}}, {{1, 1}, {3, 1}}, {{3, 1}, {5, 1}},
        {{2, 2}, {3, 2}}, {{3, 2}, {4, 2}}, {{0, 3}, {1, 3}}, {{1, 3}, {2, 3}},
        {{4, 3}, {5, 3}}, {{5, 3}, {6, 3}}, {{2, 4}, {3, 4}}, {{3, 4}, {4, 4}},
        {{1, 5}, {3, 5}}, {{3, 5}, {5, 5}}, {{0, 6}, {3, 6}}, {{3, 6}, {6, 6}}};
    std::set<std::pair<Coord, Coord>> out;
    for (auto [a, b] : list) {
      out.insert({a, b});
      out.insert({b, a});
    }
    return out;
  }();
  return edges;
}

TEST(Morris, AdjacencyIsTheMillBoardEdgeForEdge) {
  EXPECT_EQ(mill_board_edges().size(), 64u);
  int edges = 0;
  for (Coord a : games::Morris::kPoints) {
    for (Coord b : games::Morris::kPoints) {
      const bool expected = mill_board_edges().count({a, b}) > 0;
      EXPECT_EQ(games::Morris::adjacent(a, b), expected) << to_string(a) << "-" << to_string(b);
      edges += expected ? 1 : 0;
    }
  }
  EXPECT_EQ(edges, 64);
  EXPECT_EQ(games::Morris::kEdges.size(), 32u);
}

TEST(Morris, PlacementOnPointsOnly) {
  const auto game = create_game("morris");
  const GameState s = game->initial_state();
  EXPECT_EQ(game->legal_moves(s).size(), 24u);
  EXPECT_TRUE(accepts(*game, s, "p M 0 0"));
  EXPECT_FALSE(accepts(*game, s, "p M 0 1"));
  EXPECT_FALSE(accepts(*game, s, "p M 3 3"));
  EXPECT_FALSE(accepts(*game, s, "p m 0 0"));
}

TEST(Morris, MillOnPlacementMustRemoveAndPrefersLoosePieces) {
  const auto game = create_game("morris");
  // M has (0,0),(0,3); m has a mill on row 6 and a loose piece at (3,6).
  GameState s = position(*game,
                         {"M..M.._", "._._._.", "..___..", "___.__m", "..___..", "._._._.",
                          "m..m..m"},
                         0, {7, 5});
  EXPECT_FALSE(accepts(*game, s, "p M 0 6"));
  EXPECT_TRUE(accepts(*game, s, "pp 0 6 3 6"));
  EXPECT_FALSE(accepts(*game, s, "pp 0 6 6 3"));
  EXPECT_FALSE(accepts(*game, s, "pp 1 1 3 6"));
  apply_move(*game, s, parse_move("pp 0 6 3 6"));
  EXPECT_TRUE(s.board.is_empty({3, 6}));
  EXPECT_EQ(s.board.symbol({0, 6}), 'M');
  EXPECT_EQ(s.aux[0], 6);
}

TEST(Morris, MillPiecesRemovableWhenAllAreInMills) {
  const auto game = create_game("morris");
  const GameState s = position(*game,
                               {"M..M.._", "._._._.", "..___..", "___.___", "..___..", "._._._.",
                                "m..m..m"},
                               0, {7, 6});
  EXPECT_TRUE(accepts(*game, s, "pp 0 6 6 3"));
}

TEST(Morris, FlyingWithThreePiecesAndLossBelowThree) {
  const auto game = create_game("morris");
  const GameState s = position(*game,
                               {"M.._.._", "._._._.", "..M_M..", "m__.___", "..m__..", "._._._.",
                                "m.._..m"},
                               0, {0, 0});
  EXPECT_FALSE(game->game_finished(s));
  EXPECT_TRUE(accepts(*game, s, "m 0 0 6 3"));
  EXPECT_FALSE(accepts(*game, s, "m 0 0 3 3"));
  const GameState lost = position(*game,
                                  {"M.._.._", "._._._.", "..M__..", "m__.___", "..m__..",
                                   "._._._.", "m.._..m"},
                                  0, {0, 0});
  EXPECT_TRUE(game->game_finished(lost));
  EXPECT_EQ(game->get_winner(lost), std::optional<PlayerId>(1));
}

TEST(Morris, NotOverDuringPlacementEvenWithFewPieces) {
  const auto game = create_game("morris");
  const GameState s = after(*game, {"p M 0 0", "p m 6 6"});
  EXPECT_FALSE(game->game_finished(s));
  EXPECT_EQ(s.aux, (std::vector<int>{8, 8}));
}

// ----------------------------------------------------------------- checkers

TEST(Checkers, MultiJumpMustBeCompleted) {
  const auto game = create_game("checkers");
  const GameState s = position(*game,
                               {".k._._._", "_._._._.", "._.c._._", "_._._._.", "._.c._._",
                                "_._.C._.", "._._._._", "_._._._."},
                               0);
  EXPECT_FALSE(accepts(*game, s, "m 5 4 3 2"));
  EXPECT_TRUE(accepts(*game, s, "m 5 4 3 2 1 4"));
  EXPECT_EQ(game->legal_moves(s).size(), 1u);
  GameState next = s;
  apply_move(*game, next, parse_move("m 5 4 3 2 1 4"));
  EXPECT_EQ(next.board.count('c'), 0);
  EXPECT_EQ(next.board.symbol({1, 4}), 'C');
}

TEST(Checkers, CrowningEndsTheMove) {
  const auto game = create_game("checkers");
  const GameState s = position(*game,
                               {"._._._._", "_.c.c._.", ".C._._._", "_._._._.", "._._._._",
                                "_._._._.", "._._._._", "c._._._."},
                               0);
  EXPECT_TRUE(accepts(*game, s, "m 2 1 0 3"));
  EXPECT_FALSE(accepts(*game, s, "m 2 1 0 3 2 5"));
  GameState next = s;
  apply_move(*game, next, parse_move("m 2 1 0 3"));
  EXPECT_EQ(next.board.symbol({0, 3}), 'K');
  EXPECT_EQ(next.board.symbol({1, 4}), 'c');
}

TEST(Checkers, KingsMoveBackwardsAndMenDoNot) {
  const auto game = create_game("checkers");
  const GameState s = position(*game,
                               {"._._._._", "_._._._.", "._._._._", "_.K._._.", "._._._._",
                                "_._.C._.", "._._._._", "c._._._."},
                               0);
  EXPECT_TRUE(accepts(*game, s, "m 3 2 4 1"));
  EXPECT_FALSE(accepts(*game, s, "m 5 4 6 3"));
  EXPECT_TRUE(accepts(*game, s, "m 5 4 4 3"));
}

TEST(Checkers, NoPiecesLoses) {
  const auto game = create_game("checkers");
  const GameState s = position(*game,
                               {"._._._._", "_._._._.", "._._._._", "_.K._._.", "._._._._",
                                "_._._._.", "._._._._", "_._._._."},
                               1);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(0));
}

// -------------------------------------------------------------------- chess

TEST(Chess, PerftAnchorsFromPublishedPositions) {
  const auto game = create_game("chess");
  struct Case {
    const char* fen;
    std::vector<std::uint64_t> counts;
  };
  const std::vector<Case> cases{
      {"r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq -", {48, 2039}},
      {"8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - -", {14, 191, 2812}},
      {"r3k2r/Pppp1ppp/1b3nbN/nP6/BBP1P3/q4N2/Pp1P2PP/R2Q1RK1 w kq -", {6, 264, 9467}},
  };
  for (const auto& c : cases) {
    const GameState s = testing::from_fen(*game, c.fen);
    for (std::size_t d = 0; d < c.counts.size(); ++d) {
      EXPECT_EQ(harness::perft(*game, s, static_cast<int>(d) + 1), c.counts[d]) << c.fen;
    }
  }
}

TEST(Chess, FoolsMate) {
  const auto game = create_game("chess");
  const GameState s = after(*game, {"m 6 5 5 5", "m 1 4 3 4", "m 6 6 4 6", "m 0 3 4 7"});
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(1));
}

TEST(Chess, StalemateIsADraw) {
  const auto game = create_game("chess");
  const GameState s = testing::from_fen(*game, "7k/5Q2/6K1/8/8/8/8/8 b - -");
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_FALSE(game->get_winner(s).has_value());
}

TEST(Chess, PromotionNeedsAnUppercaseLetter) {
  const auto game = create_game("chess");
  const GameState s = testing::from_fen(*game, "8/P6k/8/8/8/8/8/K7 w - -");
  EXPECT_FALSE(accepts(*game, s, "m 1 0 0 0"));
  EXPECT_FALSE(accepts(*game, s, "m 1 0 0 0 =q"));
  EXPECT_FALSE(accepts(*game, s, "m 1 0 0 0 =K"));
  EXPECT_TRUE(accepts(*game, s, "m 1 0 0 0 =N"));
  GameState next = s;
  apply_move(*game, next, parse_move("m 1 0 0 0 =Q"));
  EXPECT_EQ(next.board.symbol({0, 0}), 'Q');
}

TEST(Chess, EnPassantAndCastlingThroughCheck) {
  const auto game = create_game("chess");
  GameState s = after(*game, {"m 6 4 4 4", "m 1 0 2 0", "m 4 4 3 4", "m 1 3 3 3"});
  ASSERT_TRUE(accepts(*game, s, "m 3 4 2 3"));
  apply_move(*game, s, parse_move("m 3 4 2 3"));
  EXPECT_TRUE(s.board.is_empty({3, 3}));

  const GameState castle = testing::from_fen(*game, "4k3/8/8/8/8/8/5r2/4K2R w K -");
  EXPECT_FALSE(accepts(*game, castle, "m 7 4 7 6"));
  const GameState free = testing::from_fen(*game, "4k3/8/8/8/8/8/8/4K2R w K -");
  EXPECT_TRUE(accepts(*game, free, "m 7 4 7 6"));
  const GameState lost_right = testing::from_fen(*game, "4k3/8/8/8/8/8/8/4K2R w - -");
  EXPECT_FALSE(accepts(*game, lost_right, "m 7 4 7 6"));
}

// -------------------------------------------------------------------- ardri

TEST(ArdRi, KingEscapesToACorner) {
  const auto game = create_game("ardri");
  GameState s = position(*game, {"_k_____", "_______", "_______", "___A___", "_______",
                                 "_______", "_____A_"},
                         1);
  EXPECT_TRUE(accepts(*game, s, "m 0 1 0 0"));
  apply_move(*game, s, parse_move("m 0 1 0 0"));
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(1));
}

TEST(ArdRi, OnlyTheKingEntersCorners) {
  const auto game = create_game("ardri");
  const GameState s = position(*game, {"_A_____", "d______", "_______", "___k___", "_______",
                                       "_______", "_______"},
                               0);
  EXPECT_FALSE(accepts(*game, s, "m 0 1 0 0"));
  EXPECT_TRUE(accepts(*game, s, "m 0 1 0 2"));
}

TEST(ArdRi, KingSurroundedOnFourSides) {
  const auto game = create_game("ardri");
  GameState s = position(*game, {"_______", "_______", "___A___", "__AkA__", "_______",
                                 "__A____", "_______"},
                         0);
  apply_move(*game, s, parse_move("m 5 2 4 2"));
  EXPECT_FALSE(game->game_finished(s));
  GameState t = position(*game, {"_______", "_______", "___A___", "__AkA__", "_______",
                                 "___A___", "_______"},
                         0);
  apply_move(*game, t, parse_move("m 5 3 4 3"));
  EXPECT_TRUE(game->game_finished(t));
  EXPECT_EQ(game->get_winner(t), std::optional<PlayerId>(0));
}

TEST(ArdRi, EdgeDoesNotHelpSurroundTheKing) {
  const auto game = create_game("ardri");
  const GameState s = position(*game, {"__AkA__", "___A___", "_______", "_______", "_______",
                                       "_______", "d______"},
                               1);
  EXPECT_FALSE(game->game_finished(s));
}

TEST(ArdRi, KingIsNotCapturedBetweenTwoAttackers) {
  const auto game = create_game("ardri");
  GameState s = position(*game, {"_______", "_______", "__A____", "___k___", "___A___",
                                 "_______", "d______"},
                         0);
  apply_move(*game, s, parse_move("m 2 2 2 3"));
  EXPECT_EQ(s.board.symbol({3, 3}), 'k');
}

// -------------------------------------------------------------- domineering

TEST(Domineering, FiftySixOpeningPlacementsAndStuckLoses) {
  const auto game = create_game("domineering");
  EXPECT_EQ(game->legal_moves(game->initial_state()).size(), 56u);
  const GameState s = position(*game, {"VhhVhhVh", "VhhVhhVh", "hhhhhhhh", "hhhhhhhh", "hhhhhhhh",
                                       "hhhhhhhh", "hhhhhhhh", "hhhhhh__"},
                               0);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(1));
}

// --------------------------------------------------------------------- tron

TEST(Tron, BoxedInLoses) {
  const auto game = create_game("tron");
  const GameState s = position(*game,
                               {"T0________", "00________", "__________", "__________", "__________",
                                "__________", "__________", "__________", "__________",
                                "_________t"},
                               0);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(1));
}

// ------------------------------------------------------------------ amazons

TEST(Amazons, OpeningCountAndStuckLoses) {
  const auto game = create_game("amazons");
  EXPECT_EQ(game->legal_moves(game->initial_state()).size(), 2176u);
  const GameState s = position(*game,
                               {"Q0________", "00________", "__________", "__________", "__________",
                                "__________", "__________", "__________", "__________",
                                "_________q"},
                               0);
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(1));
}

// ----------------------------------------------------------------- kharebga

TEST(Kharebga, PlacementOpeningAndNoEarlyEnd) {
  const auto game = create_game("kharebga");
  const GameState s = game->initial_state();
  EXPECT_EQ(game->legal_moves(s).size(), 552u);
  EXPECT_TRUE(accepts(*game, s, "pp 0 0 0 1"));
  EXPECT_TRUE(accepts(*game, s, "pp 0 1 0 0"));
  EXPECT_FALSE(accepts(*game, s, "pp 2 2 0 0"));
  EXPECT_FALSE(game->game_finished(after(*game, {"pp 0 0 0 1", "pp 4 4 4 3"})));
}

TEST(Kharebga, CapturesOneEnemyPerDirectionIndependently) {
  const auto game = create_game("kharebga");
  GameState s = position(*game, {"__H__", "__h__", "Hh_hH", "__H__", "_____"}, 0, {0, 0});
  // H steps from (3,2) into (2,2): west, east and north each flank one h.
  apply_move(*game, s, parse_move("m 3 2 2 2"));
  EXPECT_TRUE(s.board.is_empty({2, 1}));
  EXPECT_TRUE(s.board.is_empty({2, 3}));
  EXPECT_TRUE(s.board.is_empty({1, 2}));
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(0));
}

TEST(Kharebga, PairBetweenIsNotCaptured) {
  const auto game = create_game("kharebga");
  GameState s = position(*game, {"_H___", "__hhH", "_____", "_____", "h____"}, 0, {0, 0});
  apply_move(*game, s, parse_move("m 0 1 1 1"));
  EXPECT_EQ(s.board.symbol({1, 2}), 'h');
  EXPECT_EQ(s.board.symbol({1, 3}), 'h');
}

// ----------------------------------------------------------------- unashogi

TEST(Unashogi, GoldDestinationsExcludeBackDiagonals) {
  const auto game = create_game("unashogi");
  GameState s = game->initial_state();
  s.board.place('G', {4, 4});
  std::set<Coord> targets;
  for (const Move& m : game->legal_moves(s)) {
    if (const auto* slide = std::get_if<Slide>(&m); slide && slide->from() == Coord{4, 4}) {
      targets.insert(slide->to());
    }
  }
  const std::set<Coord> expected{{3, 3}, {3, 4}, {3, 5}, {4, 3}, {4, 5}, {5, 4}};
  EXPECT_EQ(targets, expected);
}

TEST(Unashogi, OpeningMovesAndCapturesGoToHand) {
  const auto game = create_game("unashogi");
  const GameState s = game->initial_state();
  EXPECT_EQ(game->legal_moves(s).size(), 558u);
  GameState t = after(*game, {"p R 4 4", "p p 3 4"});
  const int pawns_before = t.aux[static_cast<std::size_t>(games::Unashogi::hand_slot(0, 'P'))];
  apply_move(*game, t, parse_move("m 4 4 3 4"));
  EXPECT_EQ(t.aux[static_cast<std::size_t>(games::Unashogi::hand_slot(0, 'P'))], pawns_before + 1);
  EXPECT_EQ(t.aux[static_cast<std::size_t>(games::Unashogi::hand_slot(0, 'R'))], 0);
}

TEST(Unashogi, CapturingTheKingWins) {
  const auto game = create_game("unashogi");
  GameState s = after(*game, {"p R 1 4", "p p 5 5"});
  apply_move(*game, s, parse_move("m 1 4 0 4"));
  EXPECT_TRUE(game->game_finished(s));
  EXPECT_EQ(game->get_winner(s), std::optional<PlayerId>(0));
}

}  // namespace
}  // namespace boardwalk
