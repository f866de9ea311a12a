#include "boardwalk/games/unashogi.hpp"

#include <array>

#include "grid.hpp"

namespace boardwalk::games {
namespace {

int owner(char symbol) { return grid::case_owner(symbol); }
char kind(char symbol) { return grid::to_upper(symbol); }

bool has_king(const Board& board, PlayerId player) {
  return board.count(grid::for_player('K', player)) > 0;
}

bool kings_present(const Board& board) { return has_king(board, 0) && has_king(board, 1); }

// Single-step offsets for the stepping pieces, forward = -1 (player 0).
std::span<const Coord> step_offsets(char k) {
  static constexpr std::array<Coord, 8> king{
      {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};
  static constexpr std::array<Coord, 6> gold{{{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, 0}}};
  static constexpr std::array<Coord, 5> silver{{{-1, -1}, {-1, 0}, {-1, 1}, {1, -1}, {1, 1}}};
  static constexpr std::array<Coord, 2> knight{{{-2, -1}, {-2, 1}}};
  static constexpr std::array<Coord, 1> pawn{{{-1, 0}}};
  switch (k) {
    case 'K': return king;
    case 'G': return gold;
    case 'S': return silver;
    case 'N': return knight;
    case 'P': return pawn;
    default: return {};
  }
}

// Ray directions for the ranging pieces, forward = -1.
std::span<const Coord> ray_directions(char k) {
  static constexpr std::array<Coord, 1> lance{{{-1, 0}}};
  switch (k) {
    case 'L': return lance;
    case 'R': return grid::kOrthogonal;
    case 'B': return grid::kDiagonal;
    default: return {};
  }
}

Coord orient(Coord offset, PlayerId player) {
  return player == 0 ? offset : Coord{-offset.row, offset.col};
}

// Movement check written per piece from its rule, independent of the offset
// tables used by the generator.
bool reaches(const Board& board, char piece, PlayerId player, Coord from, Coord to) {
  const int f = Unashogi::forward(player);
  const int dr = to.row - from.row;
  const int dc = to.col - from.col;
  const int adc = std::abs(dc);
  switch (kind(piece)) {
    case 'K':
      return std::abs(dr) <= 1 && adc <= 1;
    case 'G':
      return (dr == f && adc <= 1) || (dr == 0 && adc == 1) || (dr == -f && dc == 0);
    case 'S':
      return (dr == f && adc <= 1) || (dr == -f && adc == 1);
    case 'N':
      return dr == 2 * f && adc == 1;
    case 'P':
      return dr == f && dc == 0;
    case 'L':
      return dc == 0 && dr * f > 0 && grid::path_clear(board, from, to);
    case 'R':
      return (dr == 0 || dc == 0) && grid::path_clear(board, from, to);
    case 'B':
      return std::abs(dr) == adc && grid::path_clear(board, from, to);
    default:
      return false;
  }
}

}  // namespace

int Unashogi::hand_slot(PlayerId player, char k) {
  return player * kHandSize + static_cast<int>(kHandKinds.find(k));
}

GameState Unashogi::initial_state() const {
  Board board(9, 9);
  board.place('K', {8, 4});
  board.place('k', {0, 4});
  std::vector<int> hands{2, 2, 2, 2, 1, 1, 9, 2, 2, 2, 2, 1, 1, 9};
  return GameState{std::move(board), 0, 0, std::move(hands)};
}

bool Unashogi::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  if (player != state.current_player) return false;
  const Board& board = state.board;
  if (!kings_present(board)) return false;

  if (const auto* drop = std::get_if<Place>(&move)) {
    if (owner(drop->piece) != player) return false;
    const char k = kind(drop->piece);
    if (kHandKinds.find(k) == std::string_view::npos) return false;
    return state.aux[hand_slot(player, k)] > 0 && board.is_empty(drop->at);
  }

  const Slide* slide = grid::simple_slide(move);
  if (!slide) return false;
  const Coord from = slide->from();
  const Coord to = slide->to();
  if (!board.in_bounds(from) || !board.in_bounds(to) || from == to) return false;
  const char piece = board.symbol(from);
  if (owner(piece) != player || owner(board.symbol(to)) == player) return false;
  return reaches(board, piece, player, from, to);
}

bool Unashogi::game_finished(const GameState& state) const {
  return !kings_present(state.board) || legal_moves(state).empty();
}

std::optional<PlayerId> Unashogi::get_winner(const GameState& state) const {
  if (!has_king(state.board, 1)) return 0;
  if (!has_king(state.board, 0)) return 1;
  if (legal_moves(state).empty()) return opponent(state.current_player);
  return std::nullopt;
}

PlayerId Unashogi::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Unashogi::legal_moves(const GameState& state) const {
  std::vector<Move> moves;
  const Board& board = state.board;
  if (!kings_present(board)) return moves;
  const PlayerId player = state.current_player;

  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    const char piece = board.cells()[i].symbol();
    if (owner(piece) != player) continue;
    const Coord from = board.coord_of(i);
    auto open = [&](Coord to) { return board.in_bounds(to) && owner(board.symbol(to)) != player; };
    for (Coord offset : step_offsets(kind(piece))) {
      const Coord to = from + orient(offset, player);
      if (open(to)) moves.emplace_back(grid::slide(from, to));
    }
    for (Coord direction : ray_directions(kind(piece))) {
      const Coord d = orient(direction, player);
      for (Coord to = from + d; open(to); to = to + d) {
        moves.emplace_back(grid::slide(from, to));
        if (board.cell(to).is_piece()) break;
      }
    }
  }

  for (char k : kHandKinds) {
    if (state.aux[hand_slot(player, k)] == 0) continue;
    for (std::size_t i = 0; i < board.cells().size(); ++i) {
      if (board.cells()[i].is_empty()) {
        moves.emplace_back(Place{grid::for_player(k, player), board.coord_of(i)});
      }
    }
  }
  return moves;
}

void Unashogi::perform_move(GameState& state, const Move& move) const {
  const PlayerId player = state.current_player;
  if (const auto* drop = std::get_if<Place>(&move)) {
    state.board.place(drop->piece, drop->at);
    --state.aux[hand_slot(player, kind(drop->piece))];
    return;
  }
  const auto& slide = std::get<Slide>(move);
  const char captured = state.board.symbol(slide.to());
  if (owner(captured) == opponent(player)) {
    state.board.remove(slide.to());
    if (kind(captured) != 'K') ++state.aux[hand_slot(player, kind(captured))];
  }
  state.board.move_piece(slide.from(), slide.to());
}

}  // namespace boardwalk::games
