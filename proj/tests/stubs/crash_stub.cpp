// Plays by the reference rules but aborts when the third move arrives.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "boardwalk/harness/endpoint.hpp"
#include "boardwalk/registry.hpp"

using namespace boardwalk;

int main() {
  std::unique_ptr<Game> game;
  std::optional<GameState> state;
  int moves = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.rfind("HELLO ", 0) == 0) {
      game = create_game(line.substr(6));
      state = game->initial_state();
      moves = 0;
      std::cout << "READY\n" << harness::format_snapshot(harness::snapshot_of(*game, *state));
    } else if (line.rfind("MOVE ", 0) == 0 && game) {
      if (++moves == 3) std::abort();
      const auto space = line.find(' ', 5);
      const PlayerId player = std::stoi(line.substr(5, space - 5));
      const auto move = try_parse_move(line.substr(space + 1));
      if (!move || !game->validate_move(*state, *move, player)) {
        std::cout << "INVALID\n";
      } else {
        advance(*game, *state, *move);
        std::cout << "VALID\n" << harness::format_snapshot(harness::snapshot_of(*game, *state));
      }
    }
    std::cout << std::flush;
  }
}
