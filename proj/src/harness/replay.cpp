#include "boardwalk/harness/replay.hpp"

#include <algorithm>

#include "boardwalk/registry.hpp"

namespace boardwalk::harness {
namespace {

std::string winner_text(std::optional<PlayerId> winner) {
  return winner ? std::to_string(*winner) : "none";
}

std::string terminal_text(bool terminal, std::optional<PlayerId> winner) {
  return terminal ? "terminal, winner " + winner_text(winner) : "not terminal";
}

std::string rows_text(const Board& board) {
  std::string text = format_board(board);
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string rows_text(const std::vector<std::string>& rows) {
  std::string text;
  for (const auto& row : rows) text += (text.empty() ? "" : " ") + row;
  return text;
}

class Replayer {
 public:
  Replayer(const Trace& trace, Endpoint& candidate) : trace_(trace), candidate_(candidate) {}

  ComplianceReport run() {
    bool completed = true;
    try {
      current_.emplace(candidate_.start());
      for (step_ = 0; step_ < static_cast<int>(trace_.steps.size()); ++step_) {
        if (!std::visit([this](const auto& s) { return check(s); },
                        trace_.steps[static_cast<std::size_t>(step_)])) {
          break;
        }
      }
    } catch (const CandidateCrash& e) {
      flag(ErrorCategory::crash, "no crash", e.what());
      completed = false;
    } catch (const ProtocolViolation& e) {
      flag(ErrorCategory::api, "protocol-conformant reply", e.what());
      completed = false;
    }
    report_.add_playthrough(completed);
    return std::move(report_);
  }

 private:
  bool flag(ErrorCategory category, std::string expected, std::string observed) {
    report_.record(category, {trace_.name.empty() ? trace_.game_id : trace_.name, step_,
                              std::move(expected), std::move(observed)});
    return false;
  }

  ErrorCategory layout_category() const {
    return accepted_ == 0 ? ErrorCategory::board : ErrorCategory::effect;
  }

  bool check(const InputStep& s) {
    if (current_->terminal && s.expect_valid) {
      return flag(ErrorCategory::ending, "game continues",
                  terminal_text(true, current_->winner));
    }
    auto next = candidate_.play(s.player, s.move_text);
    const std::string label = "'" + s.move_text + "' by player " + std::to_string(s.player);
    if (next.has_value() != s.expect_valid) {
      return flag(ErrorCategory::move, (s.expect_valid ? "accept " : "reject ") + label,
                  next ? "accepted" : "rejected");
    }
    if (next) {
      current_ = std::move(next);
      ++accepted_;
    }
    return true;
  }

  bool check(const AssertCell& s) {
    const Board& board = current_->board;
    if (!board.in_bounds(s.at)) {
      return flag(layout_category(), std::string(1, s.expected) + " at " + to_string(s.at),
                  "board of " + std::to_string(board.rows()) + "x" + std::to_string(board.cols()));
    }
    const char got = board.symbol(s.at);
    if (got != s.expected) {
      return flag(layout_category(), std::string(1, s.expected) + " at " + to_string(s.at),
                  std::string(1, got));
    }
    return true;
  }

  bool check(const AssertBoard& s) {
    const std::string expected = rows_text(s.rows);
    const std::string observed = rows_text(current_->board);
    if (expected != observed) return flag(layout_category(), expected, observed);
    return true;
  }

  bool check(const AssertState& s) {
    if (s.round != current_->round || s.current_player != current_->current_player) {
      return flag(ErrorCategory::turn_order,
                  "round " + std::to_string(s.round) + ", player " + std::to_string(s.current_player),
                  "round " + std::to_string(current_->round) + ", player " +
                      std::to_string(current_->current_player));
    }
    return true;
  }

  bool check(const AssertTerminal& s) {
    const bool same = s.terminal == current_->terminal && (!s.terminal || s.winner == current_->winner);
    if (!same) {
      return flag(ErrorCategory::ending, terminal_text(s.terminal, s.winner),
                  terminal_text(current_->terminal, current_->winner));
    }
    return true;
  }

  const Trace& trace_;
  Endpoint& candidate_;
  ComplianceReport report_;
  std::optional<Snapshot> current_;
  int step_ = -1;
  int accepted_ = 0;
};

}  // namespace

ComplianceReport replay_trace(const Trace& trace, Endpoint& candidate) {
  const auto game = create_game(trace.game_id);
  check_trace(trace, game->rows(), game->cols());
  return Replayer(trace, candidate).run();
}

bool SuiteResult::failed() const {
  if (combined.flag_count() > 0) return true;
  return std::any_of(entries.begin(), entries.end(),
                     [](const SuiteEntry& e) { return !e.error.empty(); });
}

SuiteResult run_suite(const std::filesystem::path& directory, const EndpointFactory& factory,
                      const std::string& game_filter) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (std::filesystem::recursive_directory_iterator it(directory, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".trace") files.push_back(it->path());
  }
  if (ec) throw TraceError("cannot read directory " + directory.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  SuiteResult result;
  for (const auto& path : files) {
    SuiteEntry entry{path, {}, {}};
    try {
      const Trace trace = load_trace(path);
      if (!game_filter.empty() && trace.game_id != game_filter) continue;
      auto endpoint = factory(trace.game_id);
      entry.report = replay_trace(trace, *endpoint);
      result.combined.merge(entry.report);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    result.entries.push_back(std::move(entry));
  }
  if (result.entries.empty()) {
    throw TraceError("no traces" + (game_filter.empty() ? "" : " for " + game_filter) + " in " +
                     directory.string());
  }
  return result;
}

}  // namespace boardwalk::harness
