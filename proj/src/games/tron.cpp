#include "boardwalk/games/tron.hpp"

#include "grid.hpp"

namespace boardwalk::games {
namespace {

std::optional<Coord> find_head(const Board& board, char head) {
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (board.cells()[i].symbol() == head) return board.coord_of(i);
  }
  return std::nullopt;
}

}  // namespace

GameState Tron::initial_state() const {
  Board board(10, 10);
  board.place(head(0), {4, 1});
  board.place(head(1), {5, 8});
  return GameState{std::move(board), 0, 0, {}};
}

bool Tron::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const Slide* step = grid::simple_slide(move);
  if (!step || player != state.current_player) return false;
  const Board& board = state.board;
  if (!board.in_bounds(step->from()) || board.symbol(step->from()) != head(player)) return false;
  const int distance = std::abs(step->to().row - step->from().row) +
                       std::abs(step->to().col - step->from().col);
  return distance == 1 && board.is_empty(step->to());
}

bool Tron::game_finished(const GameState& state) const { return legal_moves(state).empty(); }

std::optional<PlayerId> Tron::get_winner(const GameState& state) const {
  if (!game_finished(state)) return std::nullopt;
  return opponent(state.current_player);
}

PlayerId Tron::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Tron::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const auto from = find_head(state.board, head(state.current_player));
  if (!from) return moves;
  for (Coord d : grid::kOrthogonal) {
    if (state.board.is_empty(*from + d)) moves.emplace_back(grid::slide(*from, *from + d));
  }
  return moves;
}

void Tron::perform_move(GameState& state, const Move& move) const {
  const auto& step = std::get<Slide>(move);
  state.board.move_piece(step.from(), step.to());
  state.board.place(wall(state.current_player), step.from());
}

}  // namespace boardwalk::games
