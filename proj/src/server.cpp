#include "boardwalk/server.hpp"

#include <cstdio>
#include <regex>

#include "boardwalk/registry.hpp"
#include "httplib.h"

namespace boardwalk::server {
namespace {

using nlohmann::json;

Reply error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

std::optional<json> parse_body(const std::string& body) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) return std::nullopt;
  return parsed;
}

}  // namespace

json state_view(const Session& session) {
  const Game& game = *session.game;
  const GameState& state = session.state;
  const bool terminal = game.game_finished(state);
  json legal = json::array();
  for (const Move& move : game.legal_moves(state)) legal.push_back(format_move(move));
  json winner = nullptr;
  if (terminal) {
    if (auto w = game.get_winner(state)) winner = *w;
  }
  return {{"id", session.id},
          {"game", std::string(game.id())},
          {"layout", format_board(state.board)},
          {"rows", state.board.rows()},
          {"cols", state.board.cols()},
          {"round", state.round},
          {"current_player", state.current_player},
          {"terminal", terminal},
          {"winner", winner},
          {"legal_moves", legal},
          {"history", session.history}};
}

SessionService::SessionService(std::chrono::seconds idle_timeout) : idle_timeout_(idle_timeout) {
  std::random_device device;
  for (auto& rng : id_rng_) {
    std::seed_seq seed{device(), device(), device(), device()};
    rng.seed(seed);
  }
}

std::string SessionService::new_id() {
  // Two independently seeded 64-bit generators give a 128-bit token.
  char text[33];
  std::snprintf(text, sizeof text, "%016llx%016llx",
                static_cast<unsigned long long>(id_rng_[0]()),
                static_cast<unsigned long long>(id_rng_[1]()));
  return text;
}

std::shared_ptr<Session> SessionService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionService::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::size_t SessionService::expire(std::chrono::steady_clock::time_point now) {
  std::lock_guard lock(mutex_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::shared_lock session_lock(it->second->mutex);
    if (now - it->second->last_active > idle_timeout_) {
      session_lock.unlock();
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

Reply SessionService::create(const std::string& body) {
  const auto request = parse_body(body);
  if (!request || !request->contains("game") || !(*request)["game"].is_string()) {
    return error(400, "expected {\"game\": <id>}");
  }
  const std::string game_id = (*request)["game"];
  std::shared_ptr<const Game> game;
  try {
    game = create_game(game_id);
  } catch (const UnknownGame&) {
    return error(400, "unknown game '" + game_id + "'");
  }
  expire();

  auto session = std::make_shared<Session>(game, game->initial_state());
  session->created = session->last_active = std::chrono::steady_clock::now();
  {
    std::lock_guard lock(mutex_);
    do {
      session->id = new_id();
    } while (sessions_.count(session->id) > 0);
    sessions_[session->id] = session;
  }
  std::shared_lock session_lock(session->mutex);
  return {201, state_view(*session)};
}

Reply SessionService::get(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "no session '" + id + "'");
  std::shared_lock lock(session->mutex);
  return {200, state_view(*session)};
}

Reply SessionService::post_move(const std::string& id, const std::string& body) {
  auto session = find(id);
  if (!session) return error(404, "no session '" + id + "'");
  const auto request = parse_body(body);
  if (!request || !request->contains("move") || !(*request)["move"].is_string()) {
    return error(400, "expected {\"move\": <text>}");
  }
  const std::string text = (*request)["move"];

  std::unique_lock lock(session->mutex);
  session->last_active = std::chrono::steady_clock::now();
  const Game& game = *session->game;
  if (game.game_finished(session->state)) return error(409, "game is over");
  const auto move = try_parse_move(text);
  const bool valid =
      move && game.validate_move(session->state, *move, session->state.current_player);
  if (valid) {
    advance(game, session->state, *move);
    session->history.push_back(format_move(*move));
  }
  return {200, json{{"valid", valid}, {"state", state_view(*session)}}};
}

Reply SessionService::remove(const std::string& id) {
  std::lock_guard lock(mutex_);
  if (sessions_.erase(id) == 0) return error(404, "no session '" + id + "'");
  return {204, nullptr};
}

Reply SessionService::list_games() const {
  json games = json::array();
  for (const auto& id : game_ids()) {
    const auto game = create_game(id);
    games.push_back({{"id", id},
                     {"players", game->player_count()},
                     {"rows", game->rows()},
                     {"cols", game->cols()}});
  }
  return {200, games};
}

Reply SessionService::handle(const std::string& method, const std::string& path,
                             const std::string& body) {
  static const std::regex session_path(R"(^/games/([0-9a-zA-Z]+)$)");
  static const std::regex moves_path(R"(^/games/([0-9a-zA-Z]+)/moves$)");
  std::smatch m;
  if (path == "/games" && method == "POST") return create(body);
  if (path == "/meta/games" && method == "GET") return list_games();
  if (std::regex_match(path, m, session_path)) {
    if (method == "GET") return get(m[1]);
    if (method == "DELETE") return remove(m[1]);
  } else if (std::regex_match(path, m, moves_path) && method == "POST") {
    return post_move(m[1], body);
  }
  return error(404, "no route " + method + " " + path);
}

bool serve(const ServeOptions& options) {
  SessionService service(options.idle_timeout);
  httplib::Server http;

  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const Reply reply = service.handle(req.method, req.path, req.body);
    res.status = reply.status;
    if (!reply.body.is_null()) res.set_content(reply.body.dump(), "application/json");
  };
  http.Post("/games", forward);
  http.Get("/meta/games", forward);
  http.Get(R"(/games/([0-9a-zA-Z]+))", forward);
  http.Delete(R"(/games/([0-9a-zA-Z]+))", forward);
  http.Post(R"(/games/([0-9a-zA-Z]+)/moves)", forward);
  http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  if (!options.static_dir.empty()) http.set_mount_point("/", options.static_dir);

  return http.listen(options.host, options.port);
}

}  // namespace boardwalk::server
