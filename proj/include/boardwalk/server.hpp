#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "boardwalk/game.hpp"
#include "json.hpp"

namespace boardwalk::server {

struct Session {
  Session(std::shared_ptr<const Game> g, GameState s) : game(std::move(g)), state(std::move(s)) {}

  std::string id;
  std::shared_ptr<const Game> game;
  GameState state;
  std::vector<std::string> history;
  std::chrono::steady_clock::time_point created;
  std::chrono::steady_clock::time_point last_active;
  mutable std::shared_mutex mutex;
};

struct Reply {
  int status = 200;
  nlohmann::json body;  // null for an empty body
};

/// The HTTP API without the transport:
///
///   POST   /games             {"game": id}   -> 201 state view
///   GET    /games/{id}                        -> 200 state view
///   POST   /games/{id}/moves  {"move": text} -> 200 {"valid", "state"}
///   DELETE /games/{id}                        -> 204
///   GET    /meta/games                        -> 200 [{"id", "players", "rows", "cols"}]
///
/// A state view is {id, game, layout, rows, cols, round, current_player,
/// terminal, winner, legal_moves, history}. Errors are {"error": message}
/// with 400 (malformed body, unknown game), 404 (unknown session or route)
/// or 409 (move posted to a finished game).
class SessionService {
 public:
  explicit SessionService(std::chrono::seconds idle_timeout = std::chrono::hours(1));

  Reply handle(const std::string& method, const std::string& path, const std::string& body);

  Reply create(const std::string& body);
  Reply get(const std::string& id);
  Reply post_move(const std::string& id, const std::string& body);
  Reply remove(const std::string& id);
  Reply list_games() const;

  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t expire(std::chrono::steady_clock::time_point now = std::chrono::steady_clock::now());
  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id);
  std::string new_id();

  std::chrono::seconds idle_timeout_;
  mutable std::mutex mutex_;  // guards sessions_ and rng_
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 id_rng_[2];
};

/// The state view of a session; the caller holds the session lock.
nlohmann::json state_view(const Session& session);

struct ServeOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string static_dir;  // served at / when set
  std::chrono::seconds idle_timeout = std::chrono::hours(1);
};

/// Blocks serving HTTP until the process ends. Returns false if the port
/// could not be bound.
bool serve(const ServeOptions& options);

}  // namespace boardwalk::server
