#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boardwalk {

/// Zero-based (row, col) position; row 0 is the top of the board.
struct Coord {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
  friend Coord operator+(Coord a, Coord b) { return {a.row + b.row, a.col + b.col}; }
};

class BoardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One grid cell: a piece symbol, an empty playable space, or a void
/// (non-playable) point.
class Cell {
 public:
  static constexpr char kEmptySymbol = '_';
  static constexpr char kVoidSymbol = '.';

  constexpr Cell() = default;

  static constexpr Cell empty() { return Cell(kEmptySymbol); }
  static constexpr Cell void_cell() { return Cell(kVoidSymbol); }
  /// Throws BoardError unless `symbol` is a printable, non-space character
  /// other than the two reserved ones.
  static Cell piece(char symbol);
  /// Decodes a layout character.
  static Cell from_symbol(char symbol);

  static constexpr bool is_piece_symbol(char c) {
    return c > ' ' && c < 0x7f && c != kEmptySymbol && c != kVoidSymbol;
  }

  constexpr bool is_empty() const { return symbol_ == kEmptySymbol; }
  constexpr bool is_void() const { return symbol_ == kVoidSymbol; }
  constexpr bool is_piece() const { return !is_empty() && !is_void(); }
  constexpr char symbol() const { return symbol_; }

  friend constexpr bool operator==(Cell, Cell) = default;

 private:
  constexpr explicit Cell(char symbol) : symbol_(symbol) {}

  char symbol_ = kEmptySymbol;
};

/// Rectangular grid of cells. Games cannot extend it; the only mutations are
/// place, move_piece and remove.
class Board final {
 public:
  /// All-empty board.
  Board(int rows, int cols);

  /// Builds a board from layout text (see notation.hpp for the format).
  static Board from_layout(int rows, int cols, std::string_view layout);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool in_bounds(Coord at) const {
    return at.row >= 0 && at.row < rows_ && at.col >= 0 && at.col < cols_;
  }

  /// Throws BoardError when out of range.
  Cell at(Coord at) const;
  /// Unchecked variant for hot loops; `at` must be in bounds.
  Cell cell(Coord at) const { return cells_[index(at)]; }
  bool is_empty(Coord at) const { return in_bounds(at) && cell(at).is_empty(); }
  char symbol(Coord at) const { return cell(at).symbol(); }

  std::span<const Cell> cells() const { return cells_; }
  Coord coord_of(std::size_t index) const {
    return {static_cast<int>(index) / cols_, static_cast<int>(index) % cols_};
  }
  int count(char symbol) const;

  void place(char piece, Coord at);
  void move_piece(Coord from, Coord to);
  void remove(Coord at);

  friend bool operator==(const Board&, const Board&) = default;

 private:
  Board(int rows, int cols, std::vector<Cell> cells);

  std::size_t index(Coord at) const {
    return static_cast<std::size_t>(at.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(at.col);
  }
  void require_in_bounds(Coord at, std::string_view what) const;

  int rows_;
  int cols_;
  std::vector<Cell> cells_;
};

std::string to_string(Coord at);

}  // namespace boardwalk
