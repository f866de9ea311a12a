#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boardwalk/game.hpp"

namespace boardwalk {

/// Supplies move text for one player: console, scripted trace or agent.
class MoveSource {
 public:
  virtual ~MoveSource() = default;
  /// nullopt means the source has no more input.
  virtual std::optional<std::string> next_move(const Game& game, const GameState& state,
                                               PlayerId player) = 0;
};

/// Reads one line per prompt from a stream.
class StreamMoveSource final : public MoveSource {
 public:
  explicit StreamMoveSource(std::istream& in) : in_(&in) {}
  std::optional<std::string> next_move(const Game&, const GameState&, PlayerId) override;

 private:
  std::istream* in_;
};

/// Hands out a fixed list of lines in order.
class ScriptedMoveSource final : public MoveSource {
 public:
  explicit ScriptedMoveSource(std::vector<std::string> lines) : lines_(std::move(lines)) {}
  std::optional<std::string> next_move(const Game&, const GameState&, PlayerId) override;

 private:
  std::vector<std::string> lines_;
  std::size_t next_ = 0;
};

enum class LoopStatus { finished, input_exhausted, move_cap };

struct GameResult {
  GameState final_state;
  std::optional<PlayerId> winner;
  std::vector<std::pair<PlayerId, Move>> move_log;
  int rounds_played = 0;
  LoopStatus status = LoopStatus::finished;
  int prompts = 0;
  int rejected_inputs = 0;

  bool terminal() const { return status == LoopStatus::finished; }
};

struct LoopOptions {
  int max_moves = 10000;
  /// Console output; nullptr runs silently.
  std::ostream* out = nullptr;
};

/// Standard game loop: while the game is not finished, render the board and
/// prompt the current player until validate_move accepts their input, then
/// perform it. Invalid input never touches the state. `sources[p]` feeds
/// player p; a single source may be shared by passing it more than once.
GameResult run_game_loop(const Game& game, std::span<MoveSource* const> sources,
                         const LoopOptions& options = {});

/// Same, starting from an arbitrary state.
GameResult run_game_loop(const Game& game, GameState state, std::span<MoveSource* const> sources,
                         const LoopOptions& options = {});

void render_board(std::ostream& out, const Board& board);

}  // namespace boardwalk
