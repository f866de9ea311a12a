#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// Kharebga on 5x5, pieces H (player 0) and h (player 1).
///
/// Placement: each turn a player places two pieces with `pp r1 c1 r2 c2`
/// (either order) on empty cells other than the centre, until both have
/// placed 12. Movement then starts with player 0: one orthogonal step into
/// an empty cell. A step captures, in each orthogonal direction separately,
/// a single enemy piece lying between the destination and a friendly piece.
/// Capturing is optional. Losing all pieces, or having no move, loses.
///
/// aux: [pieces in hand of player 0, pieces in hand of player 1]
class Kharebga final : public Game {
 public:
  static constexpr int kPieces = 12;
  static constexpr Coord kCentre{2, 2};

  std::string_view id() const override { return "kharebga"; }
  int player_count() const override { return 2; }
  int rows() const override { return 5; }
  int cols() const override { return 5; }
  std::string_view piece_alphabet() const override { return "Hh"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static char symbol(PlayerId player) { return player == 0 ? 'H' : 'h'; }
};

}  // namespace boardwalk::games
