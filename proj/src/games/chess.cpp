#include "boardwalk/games/chess.hpp"

#include <array>

#include "grid.hpp"

namespace boardwalk::games {
namespace {

constexpr std::array<Coord, 8> kKnightJumps{
    {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1}}};
constexpr std::string_view kPromotions = "QRBN";

int owner(char symbol) { return grid::case_owner(symbol); }
char kind(char symbol) { return grid::to_upper(symbol); }
int pawn_forward(PlayerId player) { return player == 0 ? -1 : 1; }
int home_row(PlayerId player) { return player == 0 ? 7 : 0; }
int pawn_start_row(PlayerId player) { return player == 0 ? 6 : 1; }
int last_row(PlayerId player) { return player == 0 ? 0 : 7; }

std::optional<Coord> en_passant_square(const GameState& state) {
  if (state.aux[Chess::kEpRow] < 0) return std::nullopt;
  return Coord{state.aux[Chess::kEpRow], state.aux[Chess::kEpCol]};
}

std::optional<Coord> find_king(const Board& board, PlayerId player) {
  const char king = grid::for_player('K', player);
  for (std::size_t i = 0; i < board.cells().size(); ++i) {
    if (board.cells()[i].symbol() == king) return board.coord_of(i);
  }
  return std::nullopt;
}

// Board-only part of a move: relocation, captures (including en passant),
// the castling rook and promotion.
void move_on_board(Board& board, const Slide& slide, std::optional<Coord> ep) {
  const Coord from = slide.from();
  const Coord to = slide.to();
  const char piece = board.symbol(from);
  const PlayerId player = owner(piece);
  if (board.cell(to).is_piece()) board.remove(to);
  if (kind(piece) == 'P' && ep && to == *ep && from.col != to.col) {
    board.remove({from.row, to.col});
  }
  board.move_piece(from, to);
  if (kind(piece) == 'K' && std::abs(to.col - from.col) == 2) {
    const bool kingside = to.col > from.col;
    board.move_piece({from.row, kingside ? 7 : 0}, {from.row, kingside ? 5 : 3});
  }
  if (slide.promotion) {
    board.remove(to);
    board.place(grid::for_player(*slide.promotion, player), to);
  }
}

bool leaves_king_safe(const GameState& state, const Slide& slide, PlayerId player) {
  Board after = state.board;
  move_on_board(after, slide, en_passant_square(state));
  return !Chess::in_check(after, player);
}

int castle_right_index(PlayerId player, bool kingside) {
  if (player == 0) return kingside ? Chess::kWhiteKingside : Chess::kWhiteQueenside;
  return kingside ? Chess::kBlackKingside : Chess::kBlackQueenside;
}

bool castling_allowed(const GameState& state, PlayerId player, bool kingside) {
  const Board& board = state.board;
  const int row = home_row(player);
  if (!state.aux[castle_right_index(player, kingside)]) return false;
  if (board.symbol({row, 4}) != grid::for_player('K', player)) return false;
  if (board.symbol({row, kingside ? 7 : 0}) != grid::for_player('R', player)) return false;
  const int lo = kingside ? 5 : 1;
  const int hi = kingside ? 6 : 3;
  for (int c = lo; c <= hi; ++c) {
    if (!board.cell({row, c}).is_empty()) return false;
  }
  const PlayerId enemy = opponent(player);
  return !Chess::attacked(board, {row, 4}, enemy) &&
         !Chess::attacked(board, {row, kingside ? 5 : 3}, enemy);
}

// Pseudo-legal moves: correct geometry, own king safety not yet checked.
void pseudo_moves(const GameState& state, Coord from, std::vector<Slide>& out) {
  const Board& board = state.board;
  const char piece = board.symbol(from);
  const PlayerId player = owner(piece);
  auto target_ok = [&](Coord to) {
    return board.in_bounds(to) && !board.cell(to).is_void() && owner(board.symbol(to)) != player;
  };
  auto add = [&](Coord to) { out.push_back(grid::slide(from, to)); };
  auto add_pawn = [&](Coord to) {
    if (to.row == last_row(player)) {
      for (char p : kPromotions) out.push_back(Slide{{from, to}, p});
    } else {
      add(to);
    }
  };
  auto ride = [&](std::span<const Coord> directions) {
    for (Coord d : directions) {
      for (Coord to = from + d; target_ok(to); to = to + d) {
        add(to);
        if (board.cell(to).is_piece()) break;
      }
    }
  };

  switch (kind(piece)) {
    case 'P': {
      const Coord one{from.row + pawn_forward(player), from.col};
      if (board.is_empty(one)) {
        add_pawn(one);
        const Coord two{one.row + pawn_forward(player), from.col};
        if (from.row == pawn_start_row(player) && board.is_empty(two)) add(two);
      }
      const auto ep = en_passant_square(state);
      for (int dc : {-1, 1}) {
        const Coord to{one.row, from.col + dc};
        if (!board.in_bounds(to)) continue;
        if (owner(board.symbol(to)) == opponent(player) || (ep && to == *ep)) add_pawn(to);
      }
      break;
    }
    case 'N':
      for (Coord d : kKnightJumps) {
        if (target_ok(from + d)) add(from + d);
      }
      break;
    case 'B':
      ride(grid::kDiagonal);
      break;
    case 'R':
      ride(grid::kOrthogonal);
      break;
    case 'Q':
      ride(grid::kAllDirections);
      break;
    case 'K':
      for (Coord d : grid::kAllDirections) {
        if (target_ok(from + d)) add(from + d);
      }
      if (from == Coord{home_row(player), 4}) {
        if (castling_allowed(state, player, true)) add({from.row, 6});
        if (castling_allowed(state, player, false)) add({from.row, 2});
      }
      break;
    default:
      break;
  }
}

// Geometry check used by validate_move, written directly from the movement
// rules rather than through the generator.
bool geometry_ok(const GameState& state, const Slide& slide, PlayerId player) {
  const Board& board = state.board;
  const Coord from = slide.from();
  const Coord to = slide.to();
  const char piece = board.symbol(from);
  const int dr = to.row - from.row;
  const int dc = to.col - from.col;
  const int adr = std::abs(dr);
  const int adc = std::abs(dc);
  const bool capture = owner(board.symbol(to)) == opponent(player);

  switch (kind(piece)) {
    case 'N':
      return (adr == 1 && adc == 2) || (adr == 2 && adc == 1);
    case 'B':
      return adr == adc && grid::path_clear(board, from, to);
    case 'R':
      return (adr == 0 || adc == 0) && grid::path_clear(board, from, to);
    case 'Q':
      return grid::same_line(from, to) && grid::path_clear(board, from, to);
    case 'K':
      if (adr <= 1 && adc <= 1) return true;
      return adr == 0 && adc == 2 && from == Coord{home_row(player), 4} &&
             castling_allowed(state, player, dc > 0);
    case 'P': {
      const int f = pawn_forward(player);
      if (dc == 0) {
        if (capture) return false;
        if (dr == f) return true;
        return dr == 2 * f && from.row == pawn_start_row(player) &&
               board.cell({from.row + f, from.col}).is_empty();
      }
      if (adc != 1 || dr != f) return false;
      const auto ep = en_passant_square(state);
      return capture || (ep && to == *ep);
    }
    default:
      return false;
  }
}

}  // namespace

GameState Chess::initial_state() const {
  return GameState{Board::from_layout(8, 8, kLayout), 0, 0, {1, 1, 1, 1, -1, -1}};
}

bool Chess::attacked(const Board& board, Coord square, PlayerId by) {
  auto holds = [&](Coord c, char upper) {
    return board.in_bounds(c) && board.symbol(c) == grid::for_player(upper, by);
  };
  // A pawn of `by` attacks diagonally forward, so it stands one row behind.
  const int back = -pawn_forward(by);
  if (holds({square.row + back, square.col - 1}, 'P') ||
      holds({square.row + back, square.col + 1}, 'P')) {
    return true;
  }
  for (Coord d : kKnightJumps) {
    if (holds(square + d, 'N')) return true;
  }
  for (Coord d : grid::kAllDirections) {
    if (holds(square + d, 'K')) return true;
  }
  auto ray_hits = [&](std::span<const Coord> directions, char slider) {
    for (Coord d : directions) {
      Coord c = square + d;
      while (board.in_bounds(c) && board.cell(c).is_empty()) c = c + d;
      if (holds(c, slider) || holds(c, 'Q')) return true;
    }
    return false;
  };
  return ray_hits(grid::kOrthogonal, 'R') || ray_hits(grid::kDiagonal, 'B');
}

bool Chess::in_check(const Board& board, PlayerId player) {
  const auto king = find_king(board, player);
  return king && attacked(board, *king, opponent(player));
}

bool Chess::validate_move(const GameState& state, const Move& move, PlayerId player) const {
  const auto* slide = std::get_if<Slide>(&move);
  if (!slide || slide->waypoints.size() != 2 || player != state.current_player) return false;
  const Board& board = state.board;
  const Coord from = slide->from();
  const Coord to = slide->to();
  if (!board.in_bounds(from) || !board.in_bounds(to) || from == to) return false;
  const char piece = board.symbol(from);
  if (owner(piece) != player || owner(board.symbol(to)) == player) return false;
  if (kind(board.symbol(to)) == 'K' && owner(board.symbol(to)) >= 0) return false;

  const bool promoting = kind(piece) == 'P' && to.row == last_row(player);
  if (promoting != slide->promotion.has_value()) return false;
  if (promoting && kPromotions.find(*slide->promotion) == std::string_view::npos) return false;

  return geometry_ok(state, *slide, player) && leaves_king_safe(state, *slide, player);
}

bool Chess::game_finished(const GameState& state) const { return legal_moves(state).empty(); }

std::optional<PlayerId> Chess::get_winner(const GameState& state) const {
  if (!game_finished(state) || !in_check(state.board, state.current_player)) return std::nullopt;
  return opponent(state.current_player);
}

PlayerId Chess::next_player(const GameState& state) const {
  return opponent(state.current_player);
}

std::vector<Move> Chess::legal_moves(const GameState& state) const {
  const PlayerId player = state.current_player;
  std::vector<Slide> candidates;
  for (std::size_t i = 0; i < state.board.cells().size(); ++i) {
    if (owner(state.board.cells()[i].symbol()) == player) {
      pseudo_moves(state, state.board.coord_of(i), candidates);
    }
  }
  std::vector<Move> moves;
  for (auto& slide : candidates) {
    if (kind(state.board.symbol(slide.to())) == 'K') continue;
    if (leaves_king_safe(state, slide, player)) moves.emplace_back(std::move(slide));
  }
  return moves;
}

void Chess::perform_move(GameState& state, const Move& move) const {
  const auto& slide = std::get<Slide>(move);
  const Coord from = slide.from();
  const Coord to = slide.to();
  const char piece = state.board.symbol(from);
  const PlayerId player = owner(piece);
  move_on_board(state.board, slide, en_passant_square(state));

  auto& aux = state.aux;
  aux[kEpRow] = aux[kEpCol] = -1;
  if (kind(piece) == 'P' && std::abs(to.row - from.row) == 2) {
    aux[kEpRow] = (from.row + to.row) / 2;
    aux[kEpCol] = from.col;
  }
  if (kind(piece) == 'K') {
    aux[castle_right_index(player, true)] = 0;
    aux[castle_right_index(player, false)] = 0;
  }
  // A rook leaving or being captured on its corner loses that right.
  for (PlayerId p : {0, 1}) {
    for (bool kingside : {true, false}) {
      const Coord corner{home_row(p), kingside ? 7 : 0};
      if (from == corner || to == corner) aux[castle_right_index(p, kingside)] = 0;
    }
  }
}

}  // namespace boardwalk::games
