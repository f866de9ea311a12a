#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// English 33-hole cross on a 7x7 grid with void corners. One player jumps
/// a peg orthogonally over a neighbour into a hole, removing the jumped peg.
/// Won iff a single peg remains when no jump is left.
class PegSolitaire final : public Game {
 public:
  static constexpr char kPeg = 'P';
  static constexpr std::string_view kLayout =
      "..PPP..\n"
      "..PPP..\n"
      "PPPPPPP\n"
      "PPP_PPP\n"
      "PPPPPPP\n"
      "..PPP..\n"
      "..PPP..";

  std::string_view id() const override { return "pegsolitaire"; }
  int player_count() const override { return 1; }
  int rows() const override { return 7; }
  int cols() const override { return 7; }
  std::string_view piece_alphabet() const override { return "P"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;
};

}  // namespace boardwalk::games
