#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// American checkers on 8x8. Player 0 (men C, kings K) starts on rows 5-7
/// and moves up; player 1 (c, k) starts on rows 0-2. Light squares are void.
///
/// Men move and capture diagonally forward, kings both ways, one square at a
/// time. Captures are compulsory, a jump sequence lists every landing square
/// and must continue while a further jump is available, except that a man
/// reaching the far row is crowned and the move ends. A player with no
/// piece or no move loses.
class Checkers final : public Game {
 public:
  std::string_view id() const override { return "checkers"; }
  int player_count() const override { return 2; }
  int rows() const override { return 8; }
  int cols() const override { return 8; }
  std::string_view piece_alphabet() const override { return "CKck"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static char man(PlayerId player) { return player == 0 ? 'C' : 'c'; }
  static char king(PlayerId player) { return player == 0 ? 'K' : 'k'; }
  static int forward(PlayerId player) { return player == 0 ? -1 : 1; }
  static int crown_row(PlayerId player) { return player == 0 ? 0 : 7; }
  /// Whether `player` has any capture anywhere on the board.
  static bool capture_available(const Board& board, PlayerId player);
};

}  // namespace boardwalk::games
