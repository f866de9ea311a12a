#pragma once

// Trace files: a header line, then one step per line. Blank lines and lines
// starting with '#' are ignored.
//
//   boardwalk-trace <game-id> <free-text description>
//   in <player> valid|invalid <move text>
//   cell <r> <c> <symbol>
//   board <row> <row> ...          (layout rows separated by single spaces)
//   state <round> <current-player>
//   terminal false
//   terminal true <winner>|none

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boardwalk/game.hpp"

namespace boardwalk::harness {

struct InputStep {
  PlayerId player = 0;
  std::string move_text;
  bool expect_valid = true;

  friend bool operator==(const InputStep&, const InputStep&) = default;
};

struct AssertCell {
  Coord at;
  char expected = Cell::kEmptySymbol;

  friend bool operator==(const AssertCell&, const AssertCell&) = default;
};

struct AssertBoard {
  std::vector<std::string> rows;

  friend bool operator==(const AssertBoard&, const AssertBoard&) = default;
};

struct AssertState {
  int round = 0;
  PlayerId current_player = 0;

  friend bool operator==(const AssertState&, const AssertState&) = default;
};

struct AssertTerminal {
  bool terminal = false;
  std::optional<PlayerId> winner;

  friend bool operator==(const AssertTerminal&, const AssertTerminal&) = default;
};

using TraceStep = std::variant<InputStep, AssertCell, AssertBoard, AssertState, AssertTerminal>;

struct Trace {
  std::string name;  // file stem, or empty
  std::string game_id;
  std::string description;
  std::vector<TraceStep> steps;
  std::vector<int> line_numbers;  // source line of each step
};

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws TraceError naming the offending line.
Trace parse_trace(std::string_view text);
Trace load_trace(const std::filesystem::path& path);
std::string format_trace(const Trace& trace);

/// Coordinates within rows x cols, board snapshots of the right shape, and
/// nothing after a `terminal true`. Throws TraceError.
void check_trace(const Trace& trace, int rows, int cols);

}  // namespace boardwalk::harness
