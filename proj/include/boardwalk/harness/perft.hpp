#pragma once

#include <cstdint>

#include "boardwalk/game.hpp"

namespace boardwalk::harness {

/// Number of legal move sequences of exactly `depth` moves from the initial
/// state. Finished states have no moves, so sequences never run past the end
/// of a game.
std::uint64_t perft(const Game& game, int depth);
std::uint64_t perft(const Game& game, const GameState& state, int depth);

}  // namespace boardwalk::harness
