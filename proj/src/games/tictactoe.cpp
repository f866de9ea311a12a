#include "boardwalk/games/tictactoe.hpp"

#include <array>

#include "grid.hpp"

namespace boardwalk::games {
namespace {

constexpr std::array<std::array<Coord, 3>, 8> kLines{{
    {{{0, 0}, {0, 1}, {0, 2}}},
    {{{1, 0}, {1, 1}, {1, 2}}},
    {{{2, 0}, {2, 1}, {2, 2}}},
    {{{0, 0}, {1, 0}, {2, 0}}},
    {{{0, 1}, {1, 1}, {2, 1}}},
    {{{0, 2}, {1, 2}, {2, 2}}},
    {{{0, 0}, {1, 1}, {2, 2}}},
    {{{0, 2}, {1, 1}, {2, 0}}},
}};

bool board_full(const Board& board) { return board.count(Cell::kEmptySymbol) == 0; }

}  // namespace

GameState TicTacToe::initial_state() const { return GameState{Board(3, 3), 0, 0, {}}; }

std::optional<PlayerId> TicTacToe::line_owner(const Board& board) {
  for (const auto& line : kLines) {
    const char first = board.symbol(line[0]);
    if (first == board.symbol(line[1]) && first == board.symbol(line[2])) {
      if (first == symbol(0)) return 0;
      if (first == symbol(1)) return 1;
    }
  }
  return std::nullopt;
}

bool TicTacToe::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const auto* place = std::get_if<Place>(&move);
  if (!place || player != state.current_player) return false;
  if (place->piece != symbol(player) || !state.board.is_empty(place->at)) return false;
  return !line_owner(state.board);
}

bool TicTacToe::game_finished(const GameState& state) const {
  return line_owner(state.board).has_value() || board_full(state.board);
}

std::optional<PlayerId> TicTacToe::get_winner(const GameState& state) const {
  return line_owner(state.board);
}

PlayerId TicTacToe::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> TicTacToe::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  if (game_finished(state)) return moves;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (state.board.cell({r, c}).is_empty()) {
        moves.emplace_back(Place{symbol(state.current_player), {r, c}});
      }
    }
  }
  return moves;
}

}  // namespace boardwalk::games
