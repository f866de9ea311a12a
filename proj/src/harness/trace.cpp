#include "boardwalk/harness/trace.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace boardwalk::harness {
namespace {

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t offset(std::string_view line, std::string_view word) {
  return static_cast<std::size_t>(word.data() - line.data());
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw TraceError("trace line " + std::to_string(line) + ": " + message);
}

int to_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::optional<PlayerId> to_winner(std::string_view token, int line) {
  if (token == "none") return std::nullopt;
  return to_int(token, line);
}

std::string winner_text(std::optional<PlayerId> winner) {
  return winner ? std::to_string(*winner) : "none";
}

}  // namespace

Trace parse_trace(std::string_view text) {
  Trace trace;
  bool have_header = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string_view line = raw;
    const auto w = words(line);
    if (w.empty() || w[0].front() == '#') continue;

    if (!have_header) {
      if (w[0] != "boardwalk-trace" || w.size() < 2) {
        fail(line_no, "expected header 'boardwalk-trace <game-id> <description>'");
      }
      trace.game_id = std::string(w[1]);
      std::string_view rest = line.substr(offset(line, w[1]) + w[1].size());
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      trace.description = std::string(rest);
      have_header = true;
      continue;
    }

    const std::string_view kind = w[0];
    TraceStep step;
    if (kind == "in") {
      if (w.size() < 4) fail(line_no, "'in' needs a player, valid|invalid and a move");
      InputStep input;
      input.player = to_int(w[1], line_no);
      if (w[2] != "valid" && w[2] != "invalid") fail(line_no, "expected valid or invalid");
      input.expect_valid = w[2] == "valid";
      // The move text is taken verbatim after the third token.
      input.move_text = std::string(line.substr(offset(line, w[3])));
      while (!input.move_text.empty() && input.move_text.back() == ' ') input.move_text.pop_back();
      step = std::move(input);
    } else if (kind == "cell") {
      if (w.size() != 4 || w[3].size() != 1) fail(line_no, "'cell' needs <r> <c> <symbol>");
      step = AssertCell{{to_int(w[1], line_no), to_int(w[2], line_no)}, w[3][0]};
    } else if (kind == "board") {
      if (w.size() < 2) fail(line_no, "'board' needs at least one row");
      AssertBoard board;
      for (std::size_t i = 1; i < w.size(); ++i) board.rows.emplace_back(w[i]);
      step = std::move(board);
    } else if (kind == "state") {
      if (w.size() != 3) fail(line_no, "'state' needs <round> <current-player>");
      step = AssertState{to_int(w[1], line_no), to_int(w[2], line_no)};
    } else if (kind == "terminal") {
      if (w.size() == 2 && w[1] == "false") {
        step = AssertTerminal{false, std::nullopt};
      } else if (w.size() == 3 && w[1] == "true") {
        step = AssertTerminal{true, to_winner(w[2], line_no)};
      } else {
        fail(line_no, "expected 'terminal false' or 'terminal true <winner|none>'");
      }
    } else {
      fail(line_no, "unknown step '" + std::string(kind) + "'");
    }
    trace.steps.push_back(std::move(step));
    trace.line_numbers.push_back(line_no);
  }
  if (!have_header) throw TraceError("trace is empty");
  return trace;
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TraceError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Trace trace = parse_trace(buffer.str());
  trace.name = path.stem().string();
  return trace;
}

std::string format_trace(const Trace& trace) {
  std::ostringstream out;
  out << "boardwalk-trace " << trace.game_id;
  if (!trace.description.empty()) out << ' ' << trace.description;
  out << '\n';
  struct Writer {
    std::ostream& out;
    void operator()(const InputStep& s) const {
      out << "in " << s.player << ' ' << (s.expect_valid ? "valid " : "invalid ") << s.move_text;
    }
    void operator()(const AssertCell& s) const {
      out << "cell " << s.at.row << ' ' << s.at.col << ' ' << s.expected;
    }
    void operator()(const AssertBoard& s) const {
      out << "board";
      for (const auto& row : s.rows) out << ' ' << row;
    }
    void operator()(const AssertState& s) const {
      out << "state " << s.round << ' ' << s.current_player;
    }
    void operator()(const AssertTerminal& s) const {
      out << "terminal " << (s.terminal ? "true " + winner_text(s.winner) : "false");
    }
  };
  for (const auto& step : trace.steps) {
    std::visit(Writer{out}, step);
    out << '\n';
  }
  return out.str();
}

void check_trace(const Trace& trace, int rows, int cols) {
  bool ended = false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const int line = i < trace.line_numbers.size() ? trace.line_numbers[i] : 0;
    if (ended) fail(line, "step after 'terminal true'");
    const auto& step = trace.steps[i];
    if (const auto* cell = std::get_if<AssertCell>(&step)) {
      if (cell->at.row >= rows || cell->at.col >= cols) fail(line, "cell out of range");
    } else if (const auto* board = std::get_if<AssertBoard>(&step)) {
      if (static_cast<int>(board->rows.size()) != rows) fail(line, "board has wrong row count");
      for (const auto& row : board->rows) {
        if (static_cast<int>(row.size()) != cols) fail(line, "board row has wrong length");
      }
    } else if (const auto* terminal = std::get_if<AssertTerminal>(&step)) {
      ended = terminal->terminal;
    }
  }
}

}  // namespace boardwalk::harness
