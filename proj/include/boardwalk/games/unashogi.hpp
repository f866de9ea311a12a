#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// Unashogi: 9x9 drop shogi without promotion. Player 0 (uppercase) sits at
/// the bottom and moves north; only the kings start on the board, at (8,4)
/// and (0,4). Everything else starts in hand: 2 gold (G), 2 silver (S),
/// 2 knights (N), 2 lances (L), a rook (R), a bishop (B) and 9 pawns (P).
///
/// A turn is a drop, `p <piece> r c` on any empty cell, or a board move.
/// Captured pieces join the capturer's hand; capturing the king wins.
///
/// aux: hand counts, player 0 then player 1, each in the order G S N L R B P.
class Unashogi final : public Game {
 public:
  static constexpr std::string_view kHandKinds = "GSNLRBP";
  static constexpr int kHandSize = 7;

  std::string_view id() const override { return "unashogi"; }
  int player_count() const override { return 2; }
  int rows() const override { return 9; }
  int cols() const override { return 9; }
  std::string_view piece_alphabet() const override { return "KGSNLRBPkgsnlrbp"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  /// Index into aux of `player`'s count of `kind` (an uppercase hand kind).
  static int hand_slot(PlayerId player, char kind);
  static int forward(PlayerId player) { return player == 0 ? -1 : 1; }
};

}  // namespace boardwalk::games
