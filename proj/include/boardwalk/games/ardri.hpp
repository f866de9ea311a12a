#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// Ard Ri, a 7x7 tafl game. Attackers (A, player 0, moves first) against
/// the king (k) and eight defenders (d). Every piece steps one cell
/// orthogonally; only the king may enter a corner.
///
/// Moving a piece next to an enemy soldier that has a friendly piece directly
/// behind it, on the same line, captures that soldier; the king helps capture
/// but is never taken this way. The king escapes (defenders win) on reaching
/// a corner; attackers win by occupying all four cells orthogonally next to
/// the king. A player with no move loses.
class ArdRi final : public Game {
 public:
  static constexpr std::string_view kLayout =
      "__AAA__\n"
      "___A___\n"
      "A_ddd_A\n"
      "AAdkdAA\n"
      "A_ddd_A\n"
      "___A___\n"
      "__AAA__";

  std::string_view id() const override { return "ardri"; }
  int player_count() const override { return 2; }
  int rows() const override { return 7; }
  int cols() const override { return 7; }
  std::string_view piece_alphabet() const override { return "Adk"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static int owner(char symbol);
  static bool is_corner(Coord at);
};

}  // namespace boardwalk::games
