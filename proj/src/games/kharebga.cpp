#include "boardwalk/games/kharebga.hpp"

#include "grid.hpp"

namespace boardwalk::games {
namespace {

bool placing(const GameState& state) { return state.aux[0] > 0 || state.aux[1] > 0; }

bool placeable(const Board& board, Coord at) {
  return at != Kharebga::kCentre && board.is_empty(at);
}

}  // namespace

GameState Kharebga::initial_state() const {
  return GameState{Board(5, 5), 0, 0, {kPieces, kPieces}};
}

bool Kharebga::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  if (player != state.current_player) return false;
  const Board& board = state.board;
  if (placing(state)) {
    const auto* pair = std::get_if<PlacePair>(&move);
    return pair && state.aux[player] >= 2 && pair->first != pair->second &&
           placeable(board, pair->first) && placeable(board, pair->second);
  }
  if (game_finished(state)) return false;
  const Slide* step = grid::simple_slide(move);
  if (!step || !board.in_bounds(step->from())) return false;
  if (board.symbol(step->from()) != symbol(player)) return false;
  const int distance = std::abs(step->to().row - step->from().row) +
                       std::abs(step->to().col - step->from().col);
  return distance == 1 && board.is_empty(step->to());
}

bool Kharebga::game_finished(const GameState& state) const {
  if (placing(state)) return false;
  const Board& board = state.board;
  const PlayerId player = state.current_player;
  // Covers elimination too: no piece, no step.
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (board.cells()[i].symbol() != symbol(player)) continue;
    const Coord at = board.coord_of(i);
    for (Coord d : grid::kOrthogonal) {
      if (board.is_empty(at + d)) return false;
    }
  }
  return true;
}

std::optional<PlayerId> Kharebga::get_winner(const GameState& state) const {
  if (!game_finished(state)) return std::nullopt;
  return opponent(state.current_player);
}

PlayerId Kharebga::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Kharebga::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const Board& board = state.board;
  const PlayerId player = state.current_player;
  if (placing(state)) {
    if (state.aux[player] < 2) return moves;
    std::vector<Coord> free;
    for (int r = 0; r < 5; ++r) {
      for (int c = 0; c < 5; ++c) {
        if (placeable(board, {r, c})) free.push_back({r, c});
      }
    }
    for (Coord a : free) {
      for (Coord b : free) {
        if (a != b) moves.emplace_back(PlacePair{a, b});
      }
    }
    return moves;
  }
  if (game_finished(state)) return moves;
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (board.cells()[i].symbol() != symbol(player)) continue;
    const Coord from = board.coord_of(i);
    for (Coord d : grid::kOrthogonal) {
      if (board.is_empty(from + d)) moves.emplace_back(grid::slide(from, from + d));
    }
  }
  return moves;
}

void Kharebga::perform_move(GameState& state, const Move& move) const {
  const PlayerId player = state.current_player;
  Board& board = state.board;
  if (const auto* pair = std::get_if<PlacePair>(&move)) {
    board.place(symbol(player), pair->first);
    board.place(symbol(player), pair->second);
    state.aux[player] -= 2;
    return;
  }
  const auto& step = std::get<Slide>(move);
  board.move_piece(step.from(), step.to());
  for (Coord d : grid::kOrthogonal) {
    const Coord victim = step.to() + d;
    const Coord anvil = victim + d;
    if (board.in_bounds(anvil) && board.symbol(victim) == symbol(opponent(player)) &&
        board.symbol(anvil) == symbol(player)) {
      board.remove(victim);
    }
  }
}

}  // namespace boardwalk::games
