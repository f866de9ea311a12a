#include "boardwalk/harness/perft.hpp"

namespace boardwalk::harness {

std::uint64_t perft(const Game& game, int depth) {
  return perft(game, game.initial_state(), depth);
}

std::uint64_t perft(const Game& game, const GameState& state, int depth) {
  if (depth <= 0) return 1;
  const auto moves = game.legal_moves(state);
  if (depth == 1) return moves.size();
  std::uint64_t nodes = 0;
  for (const Move& move : moves) {
    GameState child = state;
    advance(game, child, move);
    nodes += perft(game, child, depth - 1);
  }
  return nodes;
}

}  // namespace boardwalk::harness
