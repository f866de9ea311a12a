#include "boardwalk/registry.hpp"

#include <functional>
#include <utility>

#include "boardwalk/games/amazons.hpp"
#include "boardwalk/games/ardri.hpp"
#include "boardwalk/games/checkers.hpp"
#include "boardwalk/games/chess.hpp"
#include "boardwalk/games/domineering.hpp"
#include "boardwalk/games/kharebga.hpp"
#include "boardwalk/games/morris.hpp"
#include "boardwalk/games/pegsolitaire.hpp"
#include "boardwalk/games/reversi.hpp"
#include "boardwalk/games/tictactoe.hpp"
#include "boardwalk/games/tron.hpp"
#include "boardwalk/games/unashogi.hpp"

namespace boardwalk {
namespace {

using Factory = std::function<std::unique_ptr<Game>()>;

template <class G>
std::pair<std::string, Factory> entry(std::string id) {
  return {std::move(id), [] { return std::make_unique<G>(); }};
}

const std::vector<std::pair<std::string, Factory>>& registry() {
  static const std::vector<std::pair<std::string, Factory>> games{
      entry<games::TicTacToe>("tictactoe"),     entry<games::PegSolitaire>("pegsolitaire"),
      entry<games::Reversi>("reversi"),         entry<games::Morris>("morris"),
      entry<games::Checkers>("checkers"),       entry<games::Chess>("chess"),
      entry<games::ArdRi>("ardri"),             entry<games::Domineering>("domineering"),
      entry<games::Tron>("tron"),               entry<games::Amazons>("amazons"),
      entry<games::Kharebga>("kharebga"),       entry<games::Unashogi>("unashogi"),
  };
  return games;
}

}  // namespace

std::unique_ptr<Game> create_game(std::string_view id) {
  for (const auto& [name, factory] : registry()) {
    if (name == id) return factory();
  }
  throw UnknownGame(id);
}

const std::vector<std::string>& game_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, factory] : registry()) out.push_back(name);
    return out;
  }();
  return ids;
}

}  // namespace boardwalk
