#pragma once

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// FIDE chess without the repetition and fifty-move draws. White (player 0,
/// uppercase KQRBNP) starts on rows 6-7 and moves up. Castling is written as
/// the king's two-square move; promotion appends `=Q`, `=R`, `=B` or `=N`
/// (always uppercase) and is mandatory on the last row. Checkmate wins,
/// stalemate draws.
///
/// aux: [white O-O, white O-O-O, black O-O, black O-O-O, en-passant row,
///       en-passant col] with -1 for "no en-passant square".
class Chess final : public Game {
 public:
  enum Aux { kWhiteKingside, kWhiteQueenside, kBlackKingside, kBlackQueenside, kEpRow, kEpCol };
  static constexpr std::string_view kLayout =
      "rnbqkbnr\n"
      "pppppppp\n"
      "________\n"
      "________\n"
      "________\n"
      "________\n"
      "PPPPPPPP\n"
      "RNBQKBNR";

  std::string_view id() const override { return "chess"; }
  int player_count() const override { return 2; }
  int rows() const override { return 8; }
  int cols() const override { return 8; }
  std::string_view piece_alphabet() const override { return "KQRBNPkqrbnp"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static bool attacked(const Board& board, Coord square, PlayerId by);
  static bool in_check(const Board& board, PlayerId player);
};

}  // namespace boardwalk::games
