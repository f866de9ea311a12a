#include "boardwalk/harness/endpoint.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "boardwalk/harness/process.hpp"
#include "boardwalk/registry.hpp"

namespace boardwalk::harness {

Snapshot snapshot_of(const Game& game, const GameState& state) {
  const bool terminal = game.game_finished(state);
  return Snapshot{state.board, state.round, state.current_player, terminal,
                  terminal ? game.get_winner(state) : std::nullopt};
}

// ---------------------------------------------------------------- in-process

InProcessEndpoint::InProcessEndpoint(std::shared_ptr<const Game> game) : game_(std::move(game)) {}

std::string InProcessEndpoint::describe() const { return "in-process " + std::string(game_->id()); }

Snapshot InProcessEndpoint::observe() const {
  const int players = game_->player_count();
  const GameState& state = *state_;
  if (state.current_player < 0 || state.current_player >= players) {
    throw ProtocolViolation("current player " + std::to_string(state.current_player) +
                            " out of range");
  }
  Snapshot snap = snapshot_of(*game_, state);
  if (snap.winner && (*snap.winner < 0 || *snap.winner >= players)) {
    throw ProtocolViolation("winner " + std::to_string(*snap.winner) + " out of range");
  }
  return snap;
}

Snapshot InProcessEndpoint::start() {
  try {
    state_ = game_->initial_state();
    return observe();
  } catch (const ProtocolViolation&) {
    throw;
  } catch (const std::exception& e) {
    throw CandidateCrash(e.what());
  }
}

std::optional<Snapshot> InProcessEndpoint::play(PlayerId player, const std::string& move_text) {
  if (!state_) throw ProtocolViolation("play before start");
  const auto move = try_parse_move(move_text);
  if (!move) return std::nullopt;
  try {
    if (!game_->validate_move(*state_, *move, player)) return std::nullopt;
    advance(*game_, *state_, *move);
    return observe();
  } catch (const ProtocolViolation&) {
    throw;
  } catch (const std::exception& e) {
    throw CandidateCrash(e.what());
  }
}

// ------------------------------------------------------------------ external

namespace {

bool printable(std::string_view line) {
  for (char c : line) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || u > 0x7e) return false;
  }
  return true;
}

std::optional<int> parse_int(std::string_view token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t end = line.find(' ', start);
    out.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

ExternalEndpoint::ExternalEndpoint(std::vector<std::string> argv, std::string game_id,
                                   std::chrono::milliseconds timeout)
    : argv_(std::move(argv)), game_id_(std::move(game_id)), timeout_(timeout) {}

ExternalEndpoint::~ExternalEndpoint() = default;

std::string ExternalEndpoint::describe() const {
  std::string text = "external";
  for (const auto& a : argv_) text += ' ' + a;
  return text;
}

std::string ExternalEndpoint::read_line(std::string_view waiting_for) {
  std::string line;
  switch (process_->read_line(line, timeout_)) {
    case Subprocess::ReadStatus::eof:
      throw CandidateCrash("candidate exited while engine waited for " + std::string(waiting_for));
    case Subprocess::ReadStatus::timeout:
      throw CandidateCrash("no " + std::string(waiting_for) + " within " +
                           std::to_string(timeout_.count()) + " ms");
    case Subprocess::ReadStatus::line:
      break;
  }
  if (!printable(line)) throw CandidateCrash("unreadable output while waiting for " +
                                             std::string(waiting_for));
  return line;
}

Snapshot ExternalEndpoint::read_snapshot() {
  const std::string header = read_line("BOARD");
  const auto h = split(header);
  std::optional<int> rows, cols;
  if (h.size() == 3 && h[0] == "BOARD") {
    rows = parse_int(h[1]);
    cols = parse_int(h[2]);
  }
  if (!rows || !cols || *rows <= 0 || *cols <= 0 || *rows > 64 || *cols > 64) {
    throw ProtocolViolation("expected 'BOARD <rows> <cols>', got '" + header + "'");
  }
  std::string layout;
  for (int r = 0; r < *rows; ++r) {
    if (r > 0) layout += '\n';
    layout += read_line("board row");
  }
  std::optional<Board> board;
  try {
    board = Board::from_layout(*rows, *cols, layout);
  } catch (const BoardError& e) {
    throw ProtocolViolation(std::string("bad board layout: ") + e.what());
  }

  const std::string state_line = read_line("STATE");
  const auto s = split(state_line);
  std::optional<int> round, player;
  if (s.size() == 3 && s[0] == "STATE") {
    round = parse_int(s[1]);
    player = parse_int(s[2]);
  }
  if (!round || !player) {
    throw ProtocolViolation("expected 'STATE <round> <player>', got '" + state_line + "'");
  }

  Snapshot snap{std::move(*board), *round, *player, false, std::nullopt};
  const std::string end_line = read_line("CONTINUE or END");
  const auto e = split(end_line);
  if (e.size() == 1 && e[0] == "CONTINUE") return snap;
  if (e.size() == 2 && e[0] == "END") {
    snap.terminal = true;
    if (e[1] != "none") {
      const auto winner = parse_int(e[1]);
      if (!winner) throw ProtocolViolation("bad winner in '" + end_line + "'");
      snap.winner = *winner;
    }
    return snap;
  }
  throw ProtocolViolation("expected CONTINUE or END, got '" + end_line + "'");
}

Snapshot ExternalEndpoint::start() {
  process_.reset();
  try {
    process_ = std::make_unique<Subprocess>(argv_);
  } catch (const SpawnError& e) {
    throw CandidateCrash(std::string("cannot start candidate: ") + e.what());
  }
  if (!process_->write_line("HELLO " + game_id_)) throw CandidateCrash("candidate closed stdin");
  const std::string reply = read_line("READY");
  if (reply != "READY") throw ProtocolViolation("expected READY, got '" + reply + "'");
  return read_snapshot();
}

std::optional<Snapshot> ExternalEndpoint::play(PlayerId player, const std::string& move_text) {
  if (!process_) throw ProtocolViolation("play before start");
  if (!process_->write_line("MOVE " + std::to_string(player) + ' ' + move_text)) {
    throw CandidateCrash("candidate closed stdin");
  }
  const std::string reply = read_line("VALID or INVALID");
  if (reply == "INVALID") return std::nullopt;
  if (reply != "VALID") throw ProtocolViolation("expected VALID or INVALID, got '" + reply + "'");
  return read_snapshot();
}

// ----------------------------------------------------------------- factories

EndpointFactory reference_factory() {
  return [](const std::string& game_id) -> std::unique_ptr<Endpoint> {
    return std::make_unique<InProcessEndpoint>(create_game(game_id));
  };
}

EndpointFactory external_factory(std::vector<std::string> argv, std::chrono::milliseconds timeout) {
  return [argv = std::move(argv), timeout](const std::string& game_id) -> std::unique_ptr<Endpoint> {
    return std::make_unique<ExternalEndpoint>(argv, game_id, timeout);
  };
}

// -------------------------------------------------------------------- server

std::string format_snapshot(const Snapshot& snapshot) {
  std::ostringstream out;
  out << "BOARD " << snapshot.board.rows() << ' ' << snapshot.board.cols() << '\n'
      << format_board(snapshot.board) << '\n'
      << "STATE " << snapshot.round << ' ' << snapshot.current_player << '\n';
  if (snapshot.terminal) {
    out << "END " << (snapshot.winner ? std::to_string(*snapshot.winner) : "none") << '\n';
  } else {
    out << "CONTINUE\n";
  }
  return out.str();
}

int serve_protocol(std::istream& in, std::ostream& out) {
  std::unique_ptr<Game> game;
  std::optional<GameState> state;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("HELLO ", 0) == 0) {
      try {
        game = create_game(line.substr(6));
      } catch (const UnknownGame& e) {
        out << "ERROR " << e.what() << std::endl;
        continue;
      }
      state = game->initial_state();
      out << "READY\n" << format_snapshot(snapshot_of(*game, *state)) << std::flush;
    } else if (line.rfind("MOVE ", 0) == 0 && game) {
      const std::string rest = line.substr(5);
      const auto space = rest.find(' ');
      const auto player = parse_int(std::string_view(rest).substr(0, space));
      const auto move =
          space == std::string::npos ? std::nullopt : try_parse_move(rest.substr(space + 1));
      if (!player || !move || !game->validate_move(*state, *move, *player)) {
        out << "INVALID" << std::endl;
        continue;
      }
      advance(*game, *state, *move);
      out << "VALID\n" << format_snapshot(snapshot_of(*game, *state)) << std::flush;
    } else {
      out << "ERROR unexpected '" << line << "'" << std::endl;
    }
  }
  return 0;
}

}  // namespace boardwalk::harness
