#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// 8x8. Player 0 places vertical dominoes (V), player 1 horizontal ones (h),
/// written `pp r c r2 c2` with the top/left cell first. A player unable to
/// place loses.
class Domineering final : public Game {
 public:
  std::string_view id() const override { return "domineering"; }
  int player_count() const override { return 2; }
  int rows() const override { return 8; }
  int cols() const override { return 8; }
  std::string_view piece_alphabet() const override { return "Vh"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static char symbol(PlayerId player) { return player == 0 ? 'V' : 'h'; }
  static Coord orientation(PlayerId player) { return player == 0 ? Coord{1, 0} : Coord{0, 1}; }
};

}  // namespace boardwalk::games
