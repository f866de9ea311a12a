#include "boardwalk/board.hpp"

#include <algorithm>

#include "boardwalk/notation.hpp"

namespace boardwalk {

Cell Cell::piece(char symbol) {
  if (!is_piece_symbol(symbol)) {
    throw BoardError(std::string("not a piece symbol: '") + symbol + "'");
  }
  return Cell(symbol);
}

Cell Cell::from_symbol(char symbol) {
  if (symbol == kEmptySymbol) return empty();
  if (symbol == kVoidSymbol) return void_cell();
  return piece(symbol);
}

Board::Board(int rows, int cols) : Board(rows, cols, {}) {}

Board::Board(int rows, int cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows <= 0 || cols <= 0) {
    throw BoardError("board dimensions must be positive");
  }
  if (cells_.empty()) {
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  Cell::empty());
  }
}

Board Board::from_layout(int rows, int cols, std::string_view layout) {
  if (rows <= 0 || cols <= 0) {
    throw BoardError("board dimensions must be positive");
  }
  try {
    return Board(rows, cols, parse_layout(layout, rows, cols));
  } catch (const ParseError& e) {
    throw BoardError(e.what());
  }
}

Cell Board::at(Coord at) const {
  require_in_bounds(at, "cell");
  return cell(at);
}

int Board::count(char symbol) const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [symbol](Cell c) { return c.symbol() == symbol; }));
}

void Board::place(char piece, Coord at) {
  require_in_bounds(at, "place");
  Cell& target = cells_[index(at)];
  if (target.is_void()) throw BoardError("place: " + to_string(at) + " is void");
  if (target.is_piece()) throw BoardError("place: " + to_string(at) + " is occupied");
  target = Cell::piece(piece);
}

void Board::move_piece(Coord from, Coord to) {
  require_in_bounds(from, "move");
  require_in_bounds(to, "move");
  Cell& source = cells_[index(from)];
  Cell& target = cells_[index(to)];
  if (!source.is_piece()) throw BoardError("move: no piece at " + to_string(from));
  if (!target.is_empty()) throw BoardError("move: " + to_string(to) + " is not empty");
  target = source;
  source = Cell::empty();
}

void Board::remove(Coord at) {
  require_in_bounds(at, "remove");
  Cell& target = cells_[index(at)];
  if (!target.is_piece()) throw BoardError("remove: no piece at " + to_string(at));
  target = Cell::empty();
}

void Board::require_in_bounds(Coord at, std::string_view what) const {
  if (!in_bounds(at)) {
    throw BoardError(std::string(what) + ": " + to_string(at) + " out of range");
  }
}

std::string to_string(Coord at) {
  return "(" + std::to_string(at.row) + "," + std::to_string(at.col) + ")";
}

}  // namespace boardwalk
