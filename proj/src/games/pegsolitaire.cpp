#include "boardwalk/games/pegsolitaire.hpp"

#include "grid.hpp"

namespace boardwalk::games {

GameState PegSolitaire::initial_state() const {
  return GameState{Board::from_layout(7, 7, kLayout), 0, 0, {}};
}

bool PegSolitaire::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const Slide* jump = grid::simple_slide(move);
  if (!jump || player != 0) return false;
  const Board& board = state.board;
  const Coord from = jump->from();
  const Coord to = jump->to();
  if (!board.in_bounds(from) || !board.in_bounds(to)) return false;
  const int dr = to.row - from.row;
  const int dc = to.col - from.col;
  const bool two_apart = (std::abs(dr) == 2 && dc == 0) || (dr == 0 && std::abs(dc) == 2);
  if (!two_apart) return false;
  const Coord over{from.row + dr / 2, from.col + dc / 2};
  return board.symbol(from) == kPeg && board.symbol(over) == kPeg && board.cell(to).is_empty();
}

bool PegSolitaire::game_finished(const GameState& state) const {
  return legal_moves(state).empty();
}

std::optional<PlayerId> PegSolitaire::get_winner(const GameState& state) const {
  if (state.board.count(kPeg) == 1) return 0;
  return std::nullopt;
}

PlayerId PegSolitaire::next_player(const GameState&) const { return 0; }

std::vector<Move> PegSolitaire::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const Board& board = state.board;
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 7; ++c) {
      const Coord from{r, c};
      if (board.symbol(from) != kPeg) continue;
      for (Coord d : grid::kOrthogonal) {
        const Coord over = from + d;
        const Coord to = over + d;
        if (board.in_bounds(to) && board.symbol(over) == kPeg && board.cell(to).is_empty()) {
          moves.emplace_back(grid::slide(from, to));
        }
      }
    }
  }
  return moves;
}

void PegSolitaire::perform_move(GameState& state, const Move& move) const {
  const auto& jump = std::get<Slide>(move);
  const Coord from = jump.from();
  const Coord to = jump.to();
  state.board.move_piece(from, to);
  state.board.remove({(from.row + to.row) / 2, (from.col + to.col) / 2});
}

}  // namespace boardwalk::games
