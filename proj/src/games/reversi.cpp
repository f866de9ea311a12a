#include "boardwalk/games/reversi.hpp"

#include "grid.hpp"

namespace boardwalk::games {

GameState Reversi::initial_state() const {
  return GameState{Board::from_layout(8, 8,
                                      "________\n"
                                      "________\n"
                                      "________\n"
                                      "___VA___\n"
                                      "___AV___\n"
                                      "________\n"
                                      "________\n"
                                      "________"),
                   0, 0, {}};
}

int Reversi::flip_count(const Board& board, Coord at, PlayerId player) {
  if (!board.is_empty(at)) return 0;
  const char own = symbol(player);
  const char enemy = symbol(opponent(player));
  int total = 0;
  for (Coord d : grid::kAllDirections) {
    int run = 0;
    Coord c = at + d;
    while (board.in_bounds(c) && board.symbol(c) == enemy) {
      ++run;
      c = c + d;
    }
    if (run > 0 && board.in_bounds(c) && board.symbol(c) == own) total += run;
  }
  return total;
}

bool Reversi::can_place(const Board& board, PlayerId player) {
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (flip_count(board, {r, c}, player) > 0) return true;
    }
  }
  return false;
}

bool Reversi::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  if (player != state.current_player) return false;
  if (std::holds_alternative<Pass>(move)) {
    return !can_place(state.board, player) && can_place(state.board, opponent(player));
  }
  const auto* place = std::get_if<Place>(&move);
  if (!place || place->piece != symbol(player)) return false;
  return flip_count(state.board, place->at, player) > 0;
}

bool Reversi::game_finished(const GameState& state) const {
  return !can_place(state.board, 0) && !can_place(state.board, 1);
}

std::optional<PlayerId> Reversi::get_winner(const GameState& state) const {
  const int a = state.board.count(symbol(0));
  const int v = state.board.count(symbol(1));
  if (a == v) return std::nullopt;
  return a > v ? 0 : 1;
}

PlayerId Reversi::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Reversi::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const PlayerId player = state.current_player;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (flip_count(state.board, {r, c}, player) > 0) {
        moves.emplace_back(Place{symbol(player), {r, c}});
      }
    }
  }
  if (moves.empty() && can_place(state.board, opponent(player))) moves.emplace_back(Pass{});
  return moves;
}

void Reversi::perform_move(GameState& state, const Move& move) const {
  const auto* place = std::get_if<Place>(&move);
  if (!place) return;
  Board& board = state.board;
  const PlayerId player = state.current_player;
  const char own = symbol(player);
  const char enemy = symbol(opponent(player));
  std::vector<Coord> flips;
  for (Coord d : grid::kAllDirections) {
    std::vector<Coord> run;
    Coord c = place->at + d;
    while (board.in_bounds(c) && board.symbol(c) == enemy) {
      run.push_back(c);
      c = c + d;
    }
    if (!run.empty() && board.in_bounds(c) && board.symbol(c) == own) {
      flips.insert(flips.end(), run.begin(), run.end());
    }
  }
  if (flips.empty()) throw ContractViolation("reversi: placement flips nothing");
  board.place(own, place->at);
  for (Coord c : flips) {
    board.remove(c);
    board.place(own, c);
  }
}

}  // namespace boardwalk::games
