#include "boardwalk/games/checkers.hpp"

#include <algorithm>

#include "grid.hpp"

namespace boardwalk::games {
namespace {

int owner(char symbol) {
  if (symbol == 'C' || symbol == 'K') return 0;
  if (symbol == 'c' || symbol == 'k') return 1;
  return -1;
}

bool is_king(char symbol) { return symbol == 'K' || symbol == 'k'; }

bool direction_allowed(char piece, PlayerId player, Coord d) {
  return is_king(piece) || d.row == Checkers::forward(player);
}

template <class T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// A jump from `at` in direction `d` for a piece of `player` moving as
// `piece`. Squares already on `path` cannot be landed on again and pieces in
// `taken` cannot be jumped twice.
bool can_jump(const Board& board, Coord at, Coord d, char piece, PlayerId player,
              const std::vector<Coord>& path, const std::vector<Coord>& taken) {
  if (!direction_allowed(piece, player, d)) return false;
  const Coord over = at + d;
  const Coord land = over + d;
  if (!board.in_bounds(land) || !board.cell(land).is_empty()) return false;
  if (owner(board.symbol(over)) != opponent(player)) return false;
  return !contains(taken, over) && !contains(path, land);
}

bool any_jump_from(const Board& board, Coord at, char piece, PlayerId player,
                   const std::vector<Coord>& path, const std::vector<Coord>& taken) {
  for (Coord d : grid::kDiagonal) {
    if (can_jump(board, at, d, piece, player, path, taken)) return true;
  }
  return false;
}

void extend_jumps(const Board& board, char piece, PlayerId player, std::vector<Coord>& path,
                  std::vector<Coord>& taken, std::vector<Move>& out) {
  const Coord at = path.back();
  const bool crowned = !is_king(piece) && at.row == Checkers::crown_row(player);
  bool extended = false;
  if (!crowned) {
    for (Coord d : grid::kDiagonal) {
      if (!can_jump(board, at, d, piece, player, path, taken)) continue;
      const Coord land = at + d + d;
      extended = true;
      path.push_back(land);
      taken.push_back(at + d);
      extend_jumps(board, piece, player, path, taken, out);
      taken.pop_back();
      path.pop_back();
    }
  }
  if (!extended && path.size() > 1) out.emplace_back(Slide{path, std::nullopt});
}

}  // namespace

GameState Checkers::initial_state() const {
  return GameState{Board::from_layout(8, 8,
                                      ".c.c.c.c\n"
                                      "c.c.c.c.\n"
                                      ".c.c.c.c\n"
                                      "_._._._.\n"
                                      "._._._._\n"
                                      "C.C.C.C.\n"
                                      ".C.C.C.C\n"
                                      "C.C.C.C."),
                   0, 0, {}};
}

bool Checkers::capture_available(const Board& board, PlayerId player) {
  const std::vector<Coord> none;
  std::vector<Coord> path(1);
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    const char piece = board.cells()[i].symbol();
    if (owner(piece) != player) continue;
    const Coord at = board.coord_of(i);
    path[0] = at;
    if (any_jump_from(board, at, piece, player, path, none)) return true;
  }
  return false;
}

bool Checkers::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const auto* slide = std::get_if<Slide>(&move);
  if (!slide || slide->promotion || player != state.current_player) return false;
  const Board& board = state.board;
  const auto& path = slide->waypoints;
  if (path.size() < 2) return false;
  for (Coord c : path) {
    if (!board.in_bounds(c)) return false;
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (path[i] == path[j]) return false;
    }
  }
  const char piece = board.symbol(path.front());
  if (owner(piece) != player) return false;

  const Coord first_step{path[1].row - path[0].row, path[1].col - path[0].col};
  if (std::abs(first_step.row) == 1 && std::abs(first_step.col) == 1) {
    return path.size() == 2 && direction_allowed(piece, player, first_step) &&
           board.cell(path[1]).is_empty() && !capture_available(board, player);
  }

  std::vector<Coord> taken;
  std::vector<Coord> visited{path.front()};
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Coord from = path[i - 1];
    const Coord to = path[i];
    if (std::abs(to.row - from.row) != 2 || std::abs(to.col - from.col) != 2) return false;
    // A man crowned mid-sequence must stop there.
    if (i > 1 && !is_king(piece) && from.row == crown_row(player)) return false;
    const Coord d{(to.row - from.row) / 2, (to.col - from.col) / 2};
    if (!can_jump(board, from, d, piece, player, visited, taken)) return false;
    taken.push_back(from + d);
    visited.push_back(to);
  }
  const Coord last = path.back();
  if (!is_king(piece) && last.row == crown_row(player)) return true;
  return !any_jump_from(board, last, piece, player, visited, taken);
}

bool Checkers::game_finished(const GameState& state) const { return legal_moves(state).empty(); }

std::optional<PlayerId> Checkers::get_winner(const GameState& state) const {
  if (!game_finished(state)) return std::nullopt;
  return opponent(state.current_player);
}

PlayerId Checkers::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Checkers::legal_moves(const GameState& state) const {
  std::vector<Move> jumps;
  std::vector<Move> steps;
  const Board& board = state.board;
  const PlayerId player = state.current_player;
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    const char piece = board.cells()[i].symbol();
    if (owner(piece) != player) continue;
    const Coord at = board.coord_of(i);
    std::vector<Coord> path{at};
    std::vector<Coord> taken;
    extend_jumps(board, piece, player, path, taken, jumps);
    for (Coord d : grid::kDiagonal) {
      if (direction_allowed(piece, player, d) && board.is_empty(at + d)) {
        steps.emplace_back(grid::slide(at, at + d));
      }
    }
  }
  return jumps.empty() ? steps : jumps;
}

void Checkers::perform_move(GameState& state, const Move& move) const {
  const auto& slide = std::get<Slide>(move);
  const auto& path = slide.waypoints;
  Board& board = state.board;
  const char piece = board.symbol(path.front());
  board.move_piece(path.front(), path.back());
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (std::abs(path[i].row - path[i - 1].row) == 2) {
      board.remove({(path[i].row + path[i - 1].row) / 2, (path[i].col + path[i - 1].col) / 2});
    }
  }
  const PlayerId player = owner(piece);
  if (!is_king(piece) && path.back().row == crown_row(player)) {
    board.remove(path.back());
    board.place(king(player), path.back());
  }
}

}  // namespace boardwalk::games
