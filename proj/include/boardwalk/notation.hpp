#pragma once

// Text formats shared by the console, trace files, the candidate wire
// protocol and the HTTP API.
//
// Moves (single spaces between tokens, no leading/trailing whitespace):
//   p <piece> <r> <c>                   place a piece
//   pp <r1> <c1> <r2> <c2>              place-pair
//   m <r1> <c1> <r2> <c2> [<r> <c> ...] slide through waypoints
//                         [=<piece>]    optional promotion suffix
//   x                                   pass
//
// Layouts: one line per row joined by '\n', one character per cell;
// '_' empty, '.' void, anything else printable and non-space is a piece.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boardwalk/board.hpp"

namespace boardwalk {

struct Place {
  char piece = 0;
  Coord at;
  friend bool operator==(const Place&, const Place&) = default;
};

struct PlacePair {
  Coord first;
  Coord second;
  friend bool operator==(const PlacePair&, const PlacePair&) = default;
};

struct Slide {
  std::vector<Coord> waypoints;  // at least two
  std::optional<char> promotion;
  friend bool operator==(const Slide&, const Slide&) = default;

  Coord from() const { return waypoints.front(); }
  Coord to() const { return waypoints.back(); }
};

struct Pass {
  friend bool operator==(const Pass&, const Pass&) = default;
};

using Move = std::variant<Place, PlacePair, Slide, Pass>;

/// Parse failure; `token()` is the offending token (empty when the input
/// as a whole is at fault, e.g. stray whitespace).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string token)
      : std::runtime_error(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

Move parse_move(std::string_view text);
std::optional<Move> try_parse_move(std::string_view text);
std::string format_move(const Move& move);

/// Validates `text` against the layout format and the given dimensions.
/// Throws ParseError on any mismatch, including whitespace inside a row.
std::vector<Cell> parse_layout(std::string_view text, int rows, int cols);
std::string format_board(const Board& board);

inline Slide make_slide(std::initializer_list<Coord> waypoints) {
  return Slide{std::vector<Coord>(waypoints), std::nullopt};
}

}  // namespace boardwalk
