#pragma once

// Small helpers shared by the rule sets.

#include <array>
#include <cctype>
#include <cstdlib>

#include "boardwalk/game.hpp"

namespace boardwalk::grid {

inline constexpr std::array<Coord, 4> kOrthogonal{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
inline constexpr std::array<Coord, 4> kDiagonal{{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};
inline constexpr std::array<Coord, 8> kAllDirections{
    {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};

inline bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
inline bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
inline char to_upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }
inline char to_lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

/// 0 for uppercase pieces, 1 for lowercase, -1 otherwise.
inline int case_owner(char c) {
  if (is_upper(c)) return 0;
  if (is_lower(c)) return 1;
  return -1;
}

inline char for_player(char upper, PlayerId player) { return player == 0 ? upper : to_lower(upper); }

/// The move as a plain two-waypoint slide without promotion, or nullptr.
inline const Slide* simple_slide(const Move& move) {
  const auto* slide = std::get_if<Slide>(&move);
  if (!slide || slide->waypoints.size() != 2 || slide->promotion) return nullptr;
  return slide;
}

inline Coord step_between(Coord from, Coord to) {
  auto sign = [](int v) { return (v > 0) - (v < 0); };
  return {sign(to.row - from.row), sign(to.col - from.col)};
}

inline bool same_line(Coord a, Coord b) {
  const int dr = std::abs(a.row - b.row);
  const int dc = std::abs(a.col - b.col);
  return a != b && (dr == 0 || dc == 0 || dr == dc);
}

inline bool path_clear(const Board& board, Coord from, Coord to) {
  const Coord step = step_between(from, to);
  for (Coord c = from + step; c != to; c = c + step) {
    if (!board.cell(c).is_empty()) return false;
  }
  return true;
}

inline Slide slide(Coord from, Coord to) { return Slide{{from, to}, std::nullopt}; }

}  // namespace boardwalk::grid
