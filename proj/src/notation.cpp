#include "boardwalk/notation.hpp"

#include <charconv>

namespace boardwalk {
namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  if (text.empty()) throw ParseError("empty move", "");
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(' ', start);
    std::string_view token = text.substr(start, end == std::string_view::npos ? end : end - start);
    if (token.empty()) throw ParseError("tokens must be separated by exactly one space", "");
    for (char c : token) {
      if (c <= ' ' || c >= 0x7f) {
        throw ParseError("unexpected character in token", std::string(token));
      }
    }
    tokens.push_back(token);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

int parse_index(std::string_view token) {
  int value = 0;
  if (token.empty() || token.size() > 6) throw ParseError("bad coordinate", std::string(token));
  for (char c : token) {
    if (c < '0' || c > '9') throw ParseError("coordinate is not an integer", std::string(token));
  }
  if (token.size() > 1 && token[0] == '0') {
    throw ParseError("coordinate has a leading zero", std::string(token));
  }
  std::from_chars(token.data(), token.data() + token.size(), value);
  return value;
}

char parse_piece(std::string_view token) {
  if (token.size() != 1) throw ParseError("piece must be one character", std::string(token));
  if (!Cell::is_piece_symbol(token[0])) {
    throw ParseError("reserved or unprintable piece symbol", std::string(token));
  }
  return token[0];
}

void require_arity(std::string_view verb, std::size_t got, std::size_t want) {
  if (got != want) {
    throw ParseError("wrong number of operands for '" + std::string(verb) + "'",
                     std::string(verb));
  }
}

}  // namespace

Move parse_move(std::string_view text) {
  const auto tokens = split_tokens(text);
  const std::string_view verb = tokens[0];
  const std::size_t operands = tokens.size() - 1;

  if (verb == "x") {
    require_arity(verb, operands, 0);
    return Pass{};
  }
  if (verb == "p") {
    require_arity(verb, operands, 3);
    return Place{parse_piece(tokens[1]), {parse_index(tokens[2]), parse_index(tokens[3])}};
  }
  if (verb == "pp") {
    require_arity(verb, operands, 4);
    return PlacePair{{parse_index(tokens[1]), parse_index(tokens[2])},
                     {parse_index(tokens[3]), parse_index(tokens[4])}};
  }
  if (verb == "m") {
    Slide slide;
    std::size_t coord_tokens = operands;
    if (operands > 0 && tokens.back().front() == '=') {
      const std::string_view suffix = tokens.back();
      slide.promotion = parse_piece(suffix.substr(1));
      --coord_tokens;
    }
    if (coord_tokens < 4 || coord_tokens % 2 != 0) {
      throw ParseError("slide needs at least two coordinate pairs", std::string(verb));
    }
    for (std::size_t i = 1; i < 1 + coord_tokens; i += 2) {
      slide.waypoints.push_back({parse_index(tokens[i]), parse_index(tokens[i + 1])});
    }
    return slide;
  }
  throw ParseError("unknown verb", std::string(verb));
}

std::optional<Move> try_parse_move(std::string_view text) {
  try {
    return parse_move(text);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::string format_move(const Move& move) {
  struct Formatter {
    std::string operator()(const Place& m) const {
      return std::string("p ") + m.piece + " " + std::to_string(m.at.row) + " " +
             std::to_string(m.at.col);
    }
    std::string operator()(const PlacePair& m) const {
      return "pp " + std::to_string(m.first.row) + " " + std::to_string(m.first.col) + " " +
             std::to_string(m.second.row) + " " + std::to_string(m.second.col);
    }
    std::string operator()(const Slide& m) const {
      std::string out = "m";
      for (Coord c : m.waypoints) {
        out += " " + std::to_string(c.row) + " " + std::to_string(c.col);
      }
      if (m.promotion) out += std::string(" =") + *m.promotion;
      return out;
    }
    std::string operator()(const Pass&) const { return "x"; }
  };
  return std::visit(Formatter{}, move);
}

std::vector<Cell> parse_layout(std::string_view text, int rows, int cols) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  int row = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find('\n', start);
    const std::string_view line =
        text.substr(start, end == std::string_view::npos ? end : end - start);
    if (row >= rows) {
      throw ParseError("layout has more than " + std::to_string(rows) + " rows", "");
    }
    if (static_cast<int>(line.size()) != cols) {
      throw ParseError("row " + std::to_string(row) + " has length " +
                           std::to_string(line.size()) + ", expected " + std::to_string(cols),
                       std::string(line));
    }
    for (char c : line) {
      if (c != Cell::kEmptySymbol && c != Cell::kVoidSymbol && !Cell::is_piece_symbol(c)) {
        throw ParseError("illegal character in row " + std::to_string(row), std::string(line));
      }
      cells.push_back(Cell::from_symbol(c));
    }
    ++row;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (row != rows) {
    throw ParseError("layout has " + std::to_string(row) + " rows, expected " +
                         std::to_string(rows),
                     "");
  }
  return cells;
}

std::string format_board(const Board& board) {
  std::string out;
  out.reserve(static_cast<std::size_t>(board.rows() * (board.cols() + 1)));
  for (int r = 0; r < board.rows(); ++r) {
    if (r > 0) out += '\n';
    for (int c = 0; c < board.cols(); ++c) out += board.symbol({r, c});
  }
  return out;
}

}  // namespace boardwalk
