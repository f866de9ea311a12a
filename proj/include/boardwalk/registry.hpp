#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boardwalk/game.hpp"

namespace boardwalk {

class UnknownGame : public std::invalid_argument {
 public:
  explicit UnknownGame(std::string_view id)
      : std::invalid_argument("unknown game: " + std::string(id)) {}
};

/// Fresh rule set for `id`; throws UnknownGame.
std::unique_ptr<Game> create_game(std::string_view id);

/// Registered ids, in a stable order.
const std::vector<std::string>& game_ids();

}  // namespace boardwalk
