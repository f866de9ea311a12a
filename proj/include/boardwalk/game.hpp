#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boardwalk/board.hpp"
#include "boardwalk/notation.hpp"

namespace boardwalk {

/// Index into a game's player enumeration, 0 <= id < player_count().
using PlayerId = int;

/// Board, move counter and player to move. `aux` holds game-defined
/// counters that do not live on the board (hands, castling rights, ...);
/// each game documents its own layout.
struct GameState {
  Board board;
  int round = 0;
  PlayerId current_player = 0;
  std::vector<int> aux;

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Raised when a caller breaks a Game precondition, e.g. performing a move
/// that validate_move rejects.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Base class for every rule set.
///
/// The four rule hooks (validate_move, game_finished, get_winner,
/// next_player) never modify the state they are given. They are always
/// called on a state whose current_player is the player to move;
/// game_finished/get_winner therefore answer "is the position with this
/// player to move over, and who won".
///
/// legal_moves must return exactly the moves that validate_move accepts for
/// the current player, and nothing on a finished state.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::string_view id() const = 0;
  virtual int player_count() const = 0;
  virtual int rows() const = 0;
  virtual int cols() const = 0;
  virtual std::string_view piece_alphabet() const = 0;
  virtual GameState initial_state() const = 0;

  virtual bool validate_move(const GameState& state, const Move& move, PlayerId player) const = 0;
  virtual bool game_finished(const GameState& state) const = 0;
  virtual std::optional<PlayerId> get_winner(const GameState& state) const = 0;
  virtual PlayerId next_player(const GameState& state) const = 0;

  virtual std::vector<Move> legal_moves(const GameState& state) const = 0;

  /// Applies a validated move to the board including all side effects.
  /// Default: Place puts the piece down, Slide moves the piece from its first
  /// to its last waypoint, Pass does nothing. PlacePair has no default.
  virtual void perform_move(GameState& state, const Move& move) const;
};

/// perform_move, then count the round and hand the turn over. The new
/// current_player is next_player() of the post-move state.
void advance(const Game& game, GameState& state, const Move& move);

/// advance() guarded by validate_move; throws ContractViolation on an
/// illegal move.
void apply_move(const Game& game, GameState& state, const Move& move);

inline PlayerId opponent(PlayerId player) { return 1 - player; }

}  // namespace boardwalk
