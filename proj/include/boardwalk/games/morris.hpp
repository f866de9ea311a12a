#pragma once

#include <array>
#include <utility>

#include "boardwalk/game.hpp"

namespace boardwalk::games {

/// Nine Men's Morris on a 7x7 grid whose 24 playable points are the mill
/// board; every other cell is void.
///
/// Moves:
///   p M r c                 place from hand (M for player 0, m for player 1)
///   pp r c rr rc            place at (r, c), closing a mill, and remove the
///                           enemy piece at (rr, rc)
///   m r1 c1 r2 c2           move along an edge (anywhere when flying)
///   m r1 c1 r2 c2 rr rc     move closing a mill, removing (rr, rc)
///
/// A mill-closing move must name its removal whenever the enemy has a piece
/// on the board. Pieces in mills are protected unless every enemy piece is
/// in a mill. A player flies with exactly three pieces after placement and
/// loses below three pieces or with no move.
///
/// aux: [pieces in hand of player 0, pieces in hand of player 1]
class Morris final : public Game {
 public:
  static constexpr int kPieces = 9;
  static constexpr std::string_view kLayout =
      "_.._.._\n"
      "._._._.\n"
      "..___..\n"
      "___.___\n"
      "..___..\n"
      "._._._.\n"
      "_.._.._";
  static const std::array<Coord, 24> kPoints;
  static const std::array<std::pair<Coord, Coord>, 32> kEdges;
  static const std::array<std::array<Coord, 3>, 16> kMills;

  std::string_view id() const override { return "morris"; }
  int player_count() const override { return 2; }
  int rows() const override { return 7; }
  int cols() const override { return 7; }
  std::string_view piece_alphabet() const override { return "Mm"; }
  GameState initial_state() const override;

  bool validate_move(const GameState& state, const Move& move, PlayerId player) const override;
  bool game_finished(const GameState& state) const override;
  std::optional<PlayerId> get_winner(const GameState& state) const override;
  PlayerId next_player(const GameState& state) const override;
  std::vector<Move> legal_moves(const GameState& state) const override;
  void perform_move(GameState& state, const Move& move) const override;

  static char symbol(PlayerId player) { return player == 0 ? 'M' : 'm'; }
  static bool is_point(Coord at);
  static bool adjacent(Coord a, Coord b);
  /// Whether the piece of `owner` at `at` is part of a complete mill.
  static bool in_mill(const Board& board, Coord at, char owner);
};

}  // namespace boardwalk::games
