#pragma once

// A candidate implementation under test, either linked in (any Game
// subclass) or an external program speaking the line protocol:
//
//   engine -> HELLO <game-id>        candidate -> READY, then a snapshot
//   engine -> MOVE <player> <move>   candidate -> VALID + snapshot | INVALID
//
// where a snapshot is
//
//   BOARD <rows> <cols>
//   <rows layout lines>
//   STATE <round> <current-player>
//   CONTINUE | END <winner>|END none

#include <chrono>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boardwalk/game.hpp"

namespace boardwalk::harness {

/// What the candidate reports after each accepted move.
struct Snapshot {
  Board board;
  int round = 0;
  PlayerId current_player = 0;
  bool terminal = false;
  std::optional<PlayerId> winner;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot snapshot_of(const Game& game, const GameState& state);

/// The candidate died, hung, or produced unreadable output (category crash).
class CandidateCrash : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The candidate answered out of protocol or broke the Game contract
/// (category api).
class ProtocolViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Endpoint {
 public:
  virtual ~Endpoint() = default;
  /// Begins a fresh game and returns its initial snapshot.
  virtual Snapshot start() = 0;
  /// Submits one move; nullopt means it was rejected.
  virtual std::optional<Snapshot> play(PlayerId player, const std::string& move_text) = 0;
  virtual std::string describe() const = 0;
};

/// Runs a Game object directly. Exceptions escaping the game become
/// CandidateCrash; out-of-range player ids become ProtocolViolation.
class InProcessEndpoint final : public Endpoint {
 public:
  explicit InProcessEndpoint(std::shared_ptr<const Game> game);
  Snapshot start() override;
  std::optional<Snapshot> play(PlayerId player, const std::string& move_text) override;
  std::string describe() const override;

 private:
  Snapshot observe() const;

  std::shared_ptr<const Game> game_;
  std::optional<GameState> state_;
};

inline constexpr std::chrono::milliseconds kDefaultReplyTimeout{10'000};

class Subprocess;

/// Spawns `argv` afresh for every start().
class ExternalEndpoint final : public Endpoint {
 public:
  ExternalEndpoint(std::vector<std::string> argv, std::string game_id,
                   std::chrono::milliseconds timeout = kDefaultReplyTimeout);
  ~ExternalEndpoint() override;
  Snapshot start() override;
  std::optional<Snapshot> play(PlayerId player, const std::string& move_text) override;
  std::string describe() const override;

 private:
  std::string read_line(std::string_view waiting_for);
  Snapshot read_snapshot();

  std::vector<std::string> argv_;
  std::string game_id_;
  std::chrono::milliseconds timeout_;
  std::unique_ptr<Subprocess> process_;
};

/// Builds a fresh endpoint for a game id; used where each trace or seed
/// may need its own candidate.
using EndpointFactory = std::function<std::unique_ptr<Endpoint>(const std::string& game_id)>;

/// Reference games from the registry.
EndpointFactory reference_factory();
/// The same external command for every game.
EndpointFactory external_factory(std::vector<std::string> argv,
                                 std::chrono::milliseconds timeout = kDefaultReplyTimeout);

/// Protocol text for a snapshot, one line per element, each ending in '\n'.
std::string format_snapshot(const Snapshot& snapshot);

/// Answers the protocol with the registry's reference games until EOF.
/// HELLO picks the game (and restarts it); unknown games and unknown
/// commands get an `ERROR <message>` line. Returns 0 at EOF.
int serve_protocol(std::istream& in, std::ostream& out);

}  // namespace boardwalk::harness
