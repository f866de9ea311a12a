#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// 10x10 light cycles. Heads T (player 0, starts (4,1)) and t (player 1,
/// starts (5,8)) take turns stepping orthogonally into empty cells, leaving a
/// permanent wall ('0' / '1') behind. A player with no step loses.
class Tron final : public Game {
 public:
  std::string_view id() const override { return "tron"; }
  int player_count() const override { return 2; }
  int rows() const override { return 10; }
  int cols() const override { return 10; }
  std::string_view piece_alphabet() const override { return "Tt01"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static char head(PlayerId player) { return player == 0 ? 'T' : 't'; }
  static char wall(PlayerId player) { return player == 0 ? '0' : '1'; }
};

}  // namespace boardwalk::games
