#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// 3x3, pieces A (player 0) and V (player 1), three in a row wins, a full
/// board without a line is a draw.
class TicTacToe final : public Game {
 public:
  std::string_view id() const override { return "tictactoe"; }
  int player_count() const override { return 2; }
  int rows() const override { return 3; }
  int cols() const override { return 3; }
  std::string_view piece_alphabet() const override { return "AV"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;

  static char symbol(PlayerId player) { return player == 0 ? 'A' : 'V'; }
  static std::optional<PlayerId> line_owner(const Board& board);
};

}  // namespace boardwalk::games
