#include "boardwalk/game.hpp"

namespace boardwalk {

void Game::perform_move(GameState& state, const Move& move) const {
  if (const auto* place = std::get_if<Place>(&move)) {
    state.board.place(place->piece, place->at);
  } else if (const auto* slide = std::get_if<Slide>(&move)) {
    state.board.move_piece(slide->from(), slide->to());
  } else if (std::holds_alternative<PlacePair>(move)) {
    throw ContractViolation(std::string(id()) + ": no default for place-pair moves");
  }
}

void advance(const Game& game, GameState& state, const Move& move) {
  game.perform_move(state, move);
  ++state.round;
  state.current_player = game.next_player(state);
}

void apply_move(const Game& game, GameState& state, const Move& move) {
  if (!game.validate_move(state, move, state.current_player)) {
    throw ContractViolation(std::string(game.id()) + ": illegal move '" + format_move(move) +
                            "'");
  }
  advance(game, state, move);
}

}  // namespace boardwalk
