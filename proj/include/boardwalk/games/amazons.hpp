#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// 10x10 Game of the Amazons. A turn is `m r1 c1 r2 c2 r3 c3`: move an own
/// amazon (Q / q) like a chess queen, then shoot an arrow ('0') like a queen
/// from the landing square. A player with no turn available loses.
class Amazons final : public Game {
 public:
  static constexpr char kArrow = '0';

  std::string_view id() const override { return "amazons"; }
  int player_count() const override { return 2; }
  int rows() const override { return 10; }
  int cols() const override { return 10; }
  std::string_view piece_alphabet() const override { return "Qq0"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static char amazon(PlayerId player) { return player == 0 ? 'Q' : 'q'; }
};

}  // namespace boardwalk::games
