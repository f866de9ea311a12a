#include "boardwalk/games/morris.hpp"

#include <algorithm>

#include "grid.hpp"

namespace boardwalk::games {

const std::array<Coord, 24> Morris::kPoints{{
    {0, 0}, {0, 3}, {0, 6},                  //
    {1, 1}, {1, 3}, {1, 5},                  //
    {2, 2}, {2, 3}, {2, 4},                  //
    {3, 0}, {3, 1}, {3, 2}, {3, 4}, {3, 5}, {3, 6},  //
    {4, 2}, {4, 3}, {4, 4},                  //
    {5, 1}, {5, 3}, {5, 5},                  //
    {6, 0}, {6, 3}, {6, 6},                  //
}};

const std::array<std::pair<Coord, Coord>, 32> Morris::kEdges{{
    // outer square
    {{0, 0}, {0, 3}}, {{0, 3}, {0, 6}}, {{0, 6}, {3, 6}}, {{3, 6}, {6, 6}},
    {{6, 6}, {6, 3}}, {{6, 3}, {6, 0}}, {{6, 0}, {3, 0}}, {{3, 0}, {0, 0}},
    // middle square
    {{1, 1}, {1, 3}}, {{1, 3}, {1, 5}}, {{1, 5}, {3, 5}}, {{3, 5}, {5, 5}},
    {{5, 5}, {5, 3}}, {{5, 3}, {5, 1}}, {{5, 1}, {3, 1}}, {{3, 1}, {1, 1}},
    // inner square
    {{2, 2}, {2, 3}}, {{2, 3}, {2, 4}}, {{2, 4}, {3, 4}}, {{3, 4}, {4, 4}},
    {{4, 4}, {4, 3}}, {{4, 3}, {4, 2}}, {{4, 2}, {3, 2}}, {{3, 2}, {2, 2}},
    // spokes
    {{0, 3}, {1, 3}}, {{1, 3}, {2, 3}}, {{3, 0}, {3, 1}}, {{3, 1}, {3, 2}},
    {{3, 4}, {3, 5}}, {{3, 5}, {3, 6}}, {{4, 3}, {5, 3}}, {{5, 3}, {6, 3}},
}};

const std::array<std::array<Coord, 3>, 16> Morris::kMills{{
    {{{0, 0}, {0, 3}, {0, 6}}}, {{{0, 6}, {3, 6}, {6, 6}}},
    {{{6, 0}, {6, 3}, {6, 6}}}, {{{0, 0}, {3, 0}, {6, 0}}},
    {{{1, 1}, {1, 3}, {1, 5}}}, {{{1, 5}, {3, 5}, {5, 5}}},
    {{{5, 1}, {5, 3}, {5, 5}}}, {{{1, 1}, {3, 1}, {5, 1}}},
    {{{2, 2}, {2, 3}, {2, 4}}}, {{{2, 4}, {3, 4}, {4, 4}}},
    {{{4, 2}, {4, 3}, {4, 4}}}, {{{2, 2}, {3, 2}, {4, 2}}},
    {{{0, 3}, {1, 3}, {2, 3}}}, {{{3, 0}, {3, 1}, {3, 2}}},
    {{{3, 4}, {3, 5}, {3, 6}}}, {{{4, 3}, {5, 3}, {6, 3}}},
}};

namespace {

enum Aux { kHand0 = 0, kHand1 = 1 };

int hand(const GameState& state, PlayerId player) { return state.aux[player == 0 ? kHand0 : kHand1]; }

bool placing(const GameState& state, PlayerId player) { return hand(state, player) > 0; }

bool flying(const GameState& state, PlayerId player) {
  return !placing(state, player) && state.board.count(Morris::symbol(player)) == 3;
}

// Would `owner` own a complete mill through `at` once the board holds
// `owner` at `at` and `vacated` (if any) is empty?
bool closes_mill(const Board& board, Coord at, std::optional<Coord> vacated, char owner) {
  for (const auto& mill : Morris::kMills) {
    if (std::find(mill.begin(), mill.end(), at) == mill.end()) continue;
    bool complete = true;
    for (Coord p : mill) {
      if (p == at) continue;
      if (p == vacated || board.symbol(p) != owner) {
        complete = false;
        break;
      }
    }
    if (complete) return true;
  }
  return false;
}

std::vector<Coord> removable(const Board& board, char enemy) {
  std::vector<Coord> all;
  std::vector<Coord> outside_mills;
  for (Coord p : Morris::kPoints) {
    if (board.symbol(p) != enemy) continue;
    all.push_back(p);
    if (!Morris::in_mill(board, p, enemy)) outside_mills.push_back(p);
  }
  return outside_mills.empty() ? all : outside_mills;
}

bool may_remove(const Board& board, Coord target, char enemy) {
  if (!board.in_bounds(target) || board.symbol(target) != enemy) return false;
  if (!Morris::in_mill(board, target, enemy)) return true;
  for (Coord p : Morris::kPoints) {
    if (board.symbol(p) == enemy && !Morris::in_mill(board, p, enemy)) return false;
  }
  return true;
}

// Checks the removal part of a move that lands on `at` (vacating `vacated`).
bool removal_ok(const GameState& state, PlayerId player, Coord at, std::optional<Coord> vacated,
                std::optional<Coord> removal) {
  const char own = Morris::symbol(player);
  const char enemy = Morris::symbol(opponent(player));
  const bool mill = closes_mill(state.board, at, vacated, own);
  const bool enemy_on_board = state.board.count(enemy) > 0;
  if (!mill || !enemy_on_board) return !removal;
  return removal && may_remove(state.board, *removal, enemy);
}

void append_with_removals(std::vector<Move>& out, const GameState& state, PlayerId player,
                          Coord at, std::optional<Coord> vacated, auto make_plain,
                          auto make_with_removal) {
  const char own = Morris::symbol(player);
  const char enemy = Morris::symbol(opponent(player));
  if (closes_mill(state.board, at, vacated, own) && state.board.count(enemy) > 0) {
    for (Coord target : removable(state.board, enemy)) out.push_back(make_with_removal(target));
  } else {
    out.push_back(make_plain());
  }
}

}  // namespace

bool Morris::is_point(Coord at) {
  return std::find(kPoints.begin(), kPoints.end(), at) != kPoints.end();
}

bool Morris::adjacent(Coord a, Coord b) {
  return std::any_of(kEdges.begin(), kEdges.end(), [&](const auto& edge) {
    return (edge.first == a && edge.second == b) || (edge.first == b && edge.second == a);
  });
}

bool Morris::in_mill(const Board& board, Coord at, char owner) {
  for (const auto& mill : kMills) {
    if (std::find(mill.begin(), mill.end(), at) == mill.end()) continue;
    if (std::all_of(mill.begin(), mill.end(), [&](Coord p) { return board.symbol(p) == owner; })) {
      return true;
    }
  }
  return false;
}

GameState Morris::initial_state() const {
  return GameState{Board::from_layout(7, 7, kLayout), 0, 0, {kPieces, kPieces}};
}

bool Morris::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  if (player != state.current_player || game_finished(state)) return false;
  const Board& board = state.board;

  if (placing(state, player)) {
    if (const auto* place = std::get_if<Place>(&move)) {
      return place->piece == symbol(player) && board.is_empty(place->at) &&
             removal_ok(state, player, place->at, std::nullopt, std::nullopt);
    }
    if (const auto* pair = std::get_if<PlacePair>(&move)) {
      return board.is_empty(pair->first) &&
             removal_ok(state, player, pair->first, std::nullopt, pair->second);
    }
    return false;
  }

  const auto* slide = std::get_if<Slide>(&move);
  if (!slide || slide->promotion) return false;
  if (slide->waypoints.size() != 2 && slide->waypoints.size() != 3) return false;
  const Coord from = slide->waypoints[0];
  const Coord to = slide->waypoints[1];
  if (!board.in_bounds(from) || board.symbol(from) != symbol(player)) return false;
  if (!board.is_empty(to)) return false;
  if (!flying(state, player) && !adjacent(from, to)) return false;
  std::optional<Coord> removal;
  if (slide->waypoints.size() == 3) removal = slide->waypoints[2];
  return removal_ok(state, player, to, from, removal);
}

bool Morris::game_finished(const GameState& state) const {
  if (hand(state, 0) > 0 || hand(state, 1) > 0) return false;
  const PlayerId player = state.current_player;
  if (state.board.count(symbol(player)) < 3) return true;
  if (flying(state, player)) return false;  // three pieces and 21 empty points
  for (Coord p : kPoints) {
    if (state.board.symbol(p) != symbol(player)) continue;
    for (const auto& [a, b] : kEdges) {
      if ((a == p && state.board.cell(b).is_empty()) ||
          (b == p && state.board.cell(a).is_empty())) {
        return false;
      }
    }
  }
  return true;
}

std::optional<PlayerId> Morris::get_winner(const GameState& state) const {
  if (!game_finished(state)) return std::nullopt;
  return opponent(state.current_player);
}

PlayerId Morris::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Morris::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  if (game_finished(state)) return moves;
  const PlayerId player = state.current_player;
  const Board& board = state.board;

  if (placing(state, player)) {
    for (Coord at : kPoints) {
      if (!board.cell(at).is_empty()) continue;
      append_with_removals(
          moves, state, player, at, std::nullopt,
          [&] { return Move{Place{symbol(player), at}}; },
          [&](Coord target) { return Move{PlacePair{at, target}}; });
    }
    return moves;
  }

  const bool fly = flying(state, player);
  for (Coord from : kPoints) {
    if (board.symbol(from) != symbol(player)) continue;
    for (Coord to : kPoints) {
      if (!board.cell(to).is_empty() || (!fly && !adjacent(from, to))) continue;
      append_with_removals(
          moves, state, player, to, from, [&] { return Move{grid::slide(from, to)}; },
          [&](Coord target) { return Move{Slide{{from, to, target}, std::nullopt}}; });
    }
  }
  return moves;
}

void Morris::perform_move(GameState& state, const Move& move) const {
  const PlayerId player = state.current_player;
  std::optional<Coord> removal;
  if (const auto* place = std::get_if<Place>(&move)) {
    state.board.place(symbol(player), place->at);
    --state.aux[player];
  } else if (const auto* pair = std::get_if<PlacePair>(&move)) {
    state.board.place(symbol(player), pair->first);
    --state.aux[player];
    removal = pair->second;
  } else {
    const auto& slide = std::get<Slide>(move);
    state.board.move_piece(slide.waypoints[0], slide.waypoints[1]);
    if (slide.waypoints.size() == 3) removal = slide.waypoints[2];
  }
  if (removal) state.board.remove(*removal);
}

}  // namespace boardwalk::games
