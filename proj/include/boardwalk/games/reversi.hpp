#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// 8x8 Othello. A (player 0) moves first; a placement must flank and flip at
/// least one line of enemy discs. `x` passes, allowed only without any
/// placement. Over when the board is full or neither side can place; most
/// discs wins.
class Reversi final : public Game {
 public:
  std::string_view id() const override { return "reversi"; }
  int player_count() const override { return 2; }
  int rows() const override { return 8; }
  int cols() const override { return 8; }
  std::string_view piece_alphabet() const override { return "AV"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static char symbol(PlayerId player) { return player == 0 ? 'A' : 'V'; }
  /// Number of discs a placement at `at` would flip (0 when not a legal spot).
  static int flip_count(const Board& board, Coord at, PlayerId player);
  static bool can_place(const Board& board, PlayerId player);
};

}  // namespace boardwalk::games
