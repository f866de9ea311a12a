#include "boardwalk/games/domineering.hpp"

#include "grid.hpp"

namespace boardwalk::games {
namespace {

bool has_placement(const Board& board, PlayerId player) {
  const Coord d = Domineering::orientation(player);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (board.is_empty({r, c}) && board.is_empty(Coord{r, c} + d)) return true;
    }
  }
  return false;
}

}  // namespace

GameState Domineering::initial_state() const { return GameState{Board(8, 8), 0, 0, {}}; }

bool Domineering::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const auto* pair = std::get_if<PlacePair>(&move);
  if (!pair || player != state.current_player) return false;
  if (pair->second != pair->first + orientation(player)) return false;
  return state.board.is_empty(pair->first) && state.board.is_empty(pair->second);
}

bool Domineering::game_finished(const GameState& state) const {
  return !has_placement(state.board, state.current_player);
}

std::optional<PlayerId> Domineering::get_winner(const GameState& state) const {
  if (!game_finished(state)) return std::nullopt;
  return opponent(state.current_player);
}

PlayerId Domineering::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Domineering::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const Coord d = orientation(state.current_player);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const Coord first{r, c};
      if (state.board.is_empty(first) && state.board.is_empty(first + d)) {
        moves.emplace_back(PlacePair{first, first + d});
      }
    }
  }
  return moves;
}

void Domineering::perform_move(GameState& state, const Move& move) const {
  const auto& pair = std::get<PlacePair>(move);
  const char piece = symbol(state.current_player);
  state.board.place(piece, pair.first);
  state.board.place(piece, pair.second);
}

}  // namespace boardwalk::games
