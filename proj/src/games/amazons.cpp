#include "boardwalk/games/amazons.hpp"

#include "grid.hpp"

namespace boardwalk::games {
namespace {

// Queen-line reachability with `vacated` treated as empty.
bool queen_reachable(const Board& board, Coord from, Coord to, std::optional<Coord> vacated) {
  if (!board.in_bounds(to) || !grid::same_line(from, to)) return false;
  const Coord step = grid::step_between(from, to);
  for (Coord c = from + step;; c = c + step) {
    if (!board.cell(c).is_empty() && c != vacated) return false;
    if (c == to) return true;
  }
}

}  // namespace

GameState Amazons::initial_state() const {
  return GameState{Board::from_layout(10, 10,
                                      "___q__q___\n"
                                      "__________\n"
                                      "__________\n"
                                      "q________q\n"
                                      "__________\n"
                                      "__________\n"
                                      "Q________Q\n"
                                      "__________\n"
                                      "__________\n"
                                      "___Q__Q___"),
                   0, 0, {}};
}

bool Amazons::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const auto* turn = std::get_if<Slide>(&move);
  if (!turn || turn->promotion || turn->waypoints.size() != 3) return false;
  if (player != state.current_player) return false;
  const Board& board = state.board;
  const Coord from = turn->waypoints[0];
  const Coord to = turn->waypoints[1];
  const Coord arrow = turn->waypoints[2];
  if (!board.in_bounds(from) || board.symbol(from) != amazon(player)) return false;
  return queen_reachable(board, from, to, std::nullopt) &&
         queen_reachable(board, to, arrow, from);
}

bool Amazons::game_finished(const GameState& state) const {
  const Board& board = state.board;
  const char own = amazon(state.current_player);
  // Any amazon with an empty neighbour can move there and shoot back.
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (board.cells()[i].symbol() != own) continue;
    const Coord at = board.coord_of(i);
    for (Coord d : grid::kAllDirections) {
      if (board.is_empty(at + d)) return false;
    }
  }
  return true;
}

std::optional<PlayerId> Amazons::get_winner(const GameState& state) const {
  if (!game_finished(state)) return std::nullopt;
  return opponent(state.current_player);
}

PlayerId Amazons::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Amazons::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const Board& board = state.board;
  const char own = amazon(state.current_player);
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (board.cells()[i].symbol() != own) continue;
    const Coord from = board.coord_of(i);
    for (Coord d : grid::kAllDirections) {
      for (Coord to = from + d; board.is_empty(to); to = to + d) {
        for (Coord e : grid::kAllDirections) {
          for (Coord arrow = to + e;
               board.in_bounds(arrow) && (board.cell(arrow).is_empty() || arrow == from);
               arrow = arrow + e) {
            moves.emplace_back(Slide{{from, to, arrow}, std::nullopt});
          }
        }
      }
    }
  }
  return moves;
}

void Amazons::perform_move(GameState& state, const Move& move) const {
  const auto& turn = std::get<Slide>(move);
  state.board.move_piece(turn.waypoints[0], turn.waypoints[1]);
  state.board.place(kArrow, turn.waypoints[2]);
}

}  // namespace boardwalk::games
