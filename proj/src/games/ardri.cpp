#include "boardwalk/games/ardri.hpp"

#include "grid.hpp"

namespace boardwalk::games {
namespace {

constexpr char kAttacker = 'A';
constexpr char kDefender = 'd';
constexpr char kKing = 'k';

std::optional<Coord> find_king(const Board& board) {
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (board.cells()[i].symbol() == kKing) return board.coord_of(i);
  }
  return std::nullopt;
}

bool king_escaped(const Board& board) {
  const auto king = find_king(board);
  return king && ArdRi::is_corner(*king);
}

bool king_surrounded(const Board& board) {
  const auto king = find_king(board);
  if (!king) return false;
  for (Coord d : grid::kOrthogonal) {
    const Coord n = *king + d;
    if (!board.in_bounds(n) || board.symbol(n) != kAttacker) return false;
  }
  return true;
}

bool step_ok(const Board& board, Coord from, Coord to) {
  if (!board.is_empty(to)) return false;
  return !ArdRi::is_corner(to) || board.symbol(from) == kKing;
}

}  // namespace

int ArdRi::owner(char symbol) {
  if (symbol == kAttacker) return 0;
  if (symbol == kDefender || symbol == kKing) return 1;
  return -1;
}

bool ArdRi::is_corner(Coord at) {
  return (at.row == 0 || at.row == 6) && (at.col == 0 || at.col == 6);
}

GameState ArdRi::initial_state() const {
  return GameState{Board::from_layout(7, 7, kLayout), 0, 0, {}};
}

bool ArdRi::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const Slide* step = grid::simple_slide(move);
  if (!step || player != state.current_player) return false;
  const Board& board = state.board;
  if (king_escaped(board) || king_surrounded(board)) return false;
  const Coord from = step->from();
  const Coord to = step->to();
  if (!board.in_bounds(from) || owner(board.symbol(from)) != player) return false;
  const int distance = std::abs(to.row - from.row) + std::abs(to.col - from.col);
  return distance == 1 && step_ok(board, from, to);
}

bool ArdRi::game_finished(const GameState& state) const {
  return king_escaped(state.board) || king_surrounded(state.board) || legal_moves(state).empty();
}

std::optional<PlayerId> ArdRi::get_winner(const GameState& state) const {
  if (king_escaped(state.board)) return 1;
  if (king_surrounded(state.board)) return 0;
  if (legal_moves(state).empty()) return opponent(state.current_player);
  return std::nullopt;
}

PlayerId ArdRi::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> ArdRi::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const Board& board = state.board;
  if (king_escaped(board) || king_surrounded(board)) return moves;
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (owner(board.cells()[i].symbol()) != state.current_player) continue;
    const Coord from = board.coord_of(i);
    for (Coord d : grid::kOrthogonal) {
      if (step_ok(board, from, from + d)) moves.emplace_back(grid::slide(from, from + d));
    }
  }
  return moves;
}

void ArdRi::perform_move(GameState& state, const Move& move) const {
  const auto& step = std::get<Slide>(move);
  Board& board = state.board;
  board.move_piece(step.from(), step.to());
  const PlayerId mover = state.current_player;
  for (Coord d : grid::kOrthogonal) {
    const Coord victim = step.to() + d;
    const Coord anvil = victim + d;
    if (!board.in_bounds(anvil)) continue;
    const char target = board.symbol(victim);
    if (target == kKing || owner(target) != opponent(mover)) continue;
    if (owner(board.symbol(anvil)) == mover) board.remove(victim);
  }
}

}  // namespace boardwalk::games
