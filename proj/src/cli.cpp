#include "boardwalk/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "boardwalk/agents.hpp"
#include "boardwalk/harness/diff.hpp"
#include "boardwalk/harness/perft.hpp"
#include "boardwalk/harness/replay.hpp"
#include "boardwalk/loop.hpp"
#include "boardwalk/registry.hpp"
#include "boardwalk/server.hpp"

namespace boardwalk::cli {
namespace {

constexpr int kMaxPerftDepth = 6;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::vector<std::string> command_words(const std::string& command) {
  std::vector<std::string> words;
  std::istringstream in(command);
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw UsageError("empty --candidate command");
  return words;
}

std::uint64_t to_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + " '" + text + "'");
}

/// `h`, `r:<seed>` or `mc:<seed>:<budget>`; nullopt for a human.
std::optional<agents::AgentConfig> parse_player(const std::string& token) {
  if (token == "h") return std::nullopt;
  const auto parts = split(token, ':');
  agents::AgentConfig config;
  if (parts.size() == 2 && parts[0] == "r") {
    config.kind = agents::AgentKind::random;
    config.seed = to_u64(parts[1], "seed");
    return config;
  }
  if (parts.size() == 3 && parts[0] == "mc") {
    config.kind = agents::AgentKind::flat_mc;
    config.seed = to_u64(parts[1], "seed");
    const auto budget = to_u64(parts[2], "budget");
    if (budget < 1 || budget > 10'000'000) throw UsageError("budget out of range in '" + token + "'");
    config.playout_budget = static_cast<int>(budget);
    return config;
  }
  throw UsageError("bad player token '" + token + "' (use h, r:<seed> or mc:<seed>:<budget>)");
}

/// Writes an agent's choice after the prompt so transcripts read like play.
class EchoSource final : public MoveSource {
 public:
  EchoSource(MoveSource& inner, std::ostream& out) : inner_(inner), out_(out) {}
  std::optional<std::string> next_move(const Game& game, const GameState& state,
                                       PlayerId player) override {
    auto text = inner_.next_move(game, state, player);
    if (text) out_ << *text << '\n';
    return text;
  }

 private:
  MoveSource& inner_;
  std::ostream& out_;
};

void write_json(const std::string& path, const nlohmann::json& doc) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << doc.dump(2) << '\n';
}

int report_status(const harness::ComplianceReport& report) {
  if (report.verdict() == harness::Verdict::unplayable) return kCrash;
  return report.flag_count() > 0 ? kCompliance : kOk;
}

struct Options {
  std::string game;
  std::string players;
  int max_moves = 10000;
  std::string target;
  std::string candidate;
  std::string report_path;
  bool json = false;
  int depth = 0;
  int seeds = 10;
  std::uint64_t seed = 0;
  int matches = 100;
  int port = 8080;
  std::string host = "0.0.0.0";
  std::string static_dir;
};

int cmd_list(std::ostream& out) {
  for (const auto& id : game_ids()) {
    const auto game = create_game(id);
    out << id << ' ' << game->player_count() << ' ' << game->rows() << 'x' << game->cols() << '\n';
  }
  return kOk;
}

int cmd_play(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto game = create_game(o.game);
  std::vector<std::string> tokens =
      o.players.empty() ? std::vector<std::string>(static_cast<std::size_t>(game->player_count()), "h")
                        : split(o.players, ',');
  if (static_cast<int>(tokens.size()) != game->player_count()) {
    throw UsageError(o.game + " needs " + std::to_string(game->player_count()) + " player token(s)");
  }
  StreamMoveSource human(in);
  std::vector<std::unique_ptr<agents::Agent>> machines;
  std::vector<std::unique_ptr<EchoSource>> echoes;
  std::vector<MoveSource*> sources;
  for (const auto& token : tokens) {
    if (auto config = parse_player(token)) {
      machines.push_back(agents::make_agent(*config));
      echoes.push_back(std::make_unique<EchoSource>(*machines.back(), out));
      sources.push_back(echoes.back().get());
    } else {
      sources.push_back(&human);
    }
  }
  LoopOptions options;
  options.max_moves = o.max_moves;
  options.out = &out;
  const GameResult result = run_game_loop(*game, sources, options);
  switch (result.status) {
    case LoopStatus::finished: return kOk;
    case LoopStatus::input_exhausted:
      err << "input ended before the game did\n";
      return kFailure;
    case LoopStatus::move_cap:
      err << "stopped after " << o.max_moves << " moves\n";
      return kFailure;
  }
  return kFailure;
}

int cmd_perft(const Options& o, std::ostream& out) {
  if (o.depth < 0 || o.depth > kMaxPerftDepth) {
    throw UsageError("depth must be between 0 and " + std::to_string(kMaxPerftDepth));
  }
  const auto game = create_game(o.game);
  out << harness::perft(*game, o.depth) << '\n';
  return kOk;
}

harness::EndpointFactory candidate_factory(const Options& o) {
  if (o.candidate.empty()) return harness::reference_factory();
  return harness::external_factory(command_words(o.candidate));
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  const std::filesystem::path target = o.target;
  const std::string filter = o.game == "all" ? "" : o.game;
  if (!filter.empty()) create_game(filter);  // unknown ids fail early
  const auto factory = candidate_factory(o);

  if (!std::filesystem::is_directory(target)) {
    const harness::Trace trace = harness::load_trace(target);
    if (!filter.empty() && trace.game_id != filter) {
      throw harness::TraceError(target.string() + " is a " + trace.game_id + " trace");
    }
    auto endpoint = factory(trace.game_id);
    const auto report = harness::replay_trace(trace, *endpoint);
    if (!o.report_path.empty()) write_json(o.report_path, report.to_json());
    if (o.json) {
      out << report.to_json().dump(2) << '\n';
    } else {
      out << report.summary_table();
    }
    return report_status(report);
  }

  const auto suite = harness::run_suite(target, factory, filter);
  nlohmann::json doc{{"traces", nlohmann::json::array()}, {"combined", suite.combined.to_json()}};
  for (const auto& entry : suite.entries) {
    nlohmann::json item{{"path", entry.path.string()}};
    if (!entry.error.empty()) {
      item["error"] = entry.error;
      err << entry.path.string() << ": " << entry.error << '\n';
    } else {
      item["report"] = entry.report.to_json();
    }
    doc["traces"].push_back(item);
  }
  if (!o.report_path.empty()) write_json(o.report_path, doc);
  if (o.json) {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& entry : suite.entries) {
      out << entry.path.filename().string() << ' '
          << (entry.error.empty() ? harness::to_string(entry.report.verdict()) : "error") << '\n';
    }
    out << suite.combined.summary_table();
  }
  const int status = report_status(suite.combined);
  if (status != kOk) return status;
  return suite.failed() ? kGameError : kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.candidate.empty()) throw UsageError("check needs --candidate");
  if (o.seeds < 1) throw UsageError("--seeds must be positive");
  create_game(o.game);
  harness::InProcessEndpoint reference(create_game(o.game));
  harness::ExternalEndpoint candidate(command_words(o.candidate), o.game);
  harness::DiffOptions options;
  options.seeds.clear();
  for (int i = 0; i < o.seeds; ++i) options.seeds.push_back(o.seed + static_cast<std::uint64_t>(i));
  options.max_moves = o.max_moves;
  const auto report = harness::diff_candidates(o.game, reference, candidate, options);
  if (!o.report_path.empty()) write_json(o.report_path, report.to_json());
  if (o.json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.summary_table();
  }
  return report_status(report);
}

int cmd_selfplay(const Options& o, std::ostream& out) {
  const auto game = create_game(o.game);
  std::vector<std::string> tokens = o.players.empty()
      ? std::vector<std::string>(static_cast<std::size_t>(game->player_count()), "r:0")
      : split(o.players, ',');
  if (static_cast<int>(tokens.size()) != game->player_count()) {
    throw UsageError(o.game + " needs " + std::to_string(game->player_count()) + " player token(s)");
  }
  std::vector<agents::AgentConfig> configs;
  for (const auto& token : tokens) {
    auto config = parse_player(token);
    if (!config) throw UsageError("selfplay takes no human players");
    configs.push_back(*config);
  }

  std::map<std::string, int> tally;
  for (int match = 0; match < o.matches; ++match) {
    std::vector<std::unique_ptr<agents::Agent>> owned;
    std::vector<agents::Agent*> players;
    for (std::size_t p = 0; p < configs.size(); ++p) {
      agents::AgentConfig config = configs[p];
      // Every match and seat gets its own stream derived from --seed.
      config.seed += o.seed * 1'000'003ULL + static_cast<std::uint64_t>(match) * 7919ULL + p;
      owned.push_back(agents::make_agent(config));
      players.push_back(owned.back().get());
    }
    const GameResult result = agents::play_match(*game, players, o.max_moves);
    if (!result.terminal()) {
      ++tally["unfinished"];
    } else if (result.winner) {
      ++tally["winner " + std::to_string(*result.winner)];
    } else {
      ++tally["draw"];
    }
  }
  out << "matches " << o.matches << '\n';
  for (const auto& [label, count] : tally) out << label << ' ' << count << '\n';
  return kOk;
}

int cmd_serve(const Options& o, std::ostream& err) {
  server::ServeOptions options;
  options.host = o.host;
  options.port = o.port;
  options.static_dir = o.static_dir;
  err << "listening on " << o.host << ':' << o.port << '\n' << std::flush;
  if (!server::serve(options)) {
    err << "cannot listen on port " << o.port << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Grid board game engine, reference games and rule-compliance harness", "boardwalk"};
  app.require_subcommand(1);
  Options o;

  auto* list = app.add_subcommand("list", "List the available games");

  auto* play = app.add_subcommand("play", "Play a game on the console");
  play->add_option("game", o.game, "Game id")->required();
  play->add_option("--players", o.players, "Comma-separated h | r:<seed> | mc:<seed>:<budget>");
  play->add_option("--max-moves", o.max_moves, "Stop after this many moves");

  auto* replay = app.add_subcommand("replay", "Replay traces against a candidate");
  replay->add_option("game", o.game, "Game id, or 'all' for a directory of mixed traces")->required();
  replay->add_option("trace", o.target, "Trace file or directory")->required();
  replay->add_option("--candidate", o.candidate, "External candidate command (default: reference)");
  replay->add_option("--report", o.report_path, "Write the JSON report here");
  replay->add_flag("--json", o.json, "Print the JSON report instead of the table");

  auto* check = app.add_subcommand("check", "Differential test of a candidate against the reference");
  check->add_option("game", o.game, "Game id")->required();
  check->add_option("--candidate", o.candidate, "External candidate command")->required();
  check->add_option("--seeds", o.seeds, "Number of seeded games");
  check->add_option("--seed", o.seed, "First seed");
  check->add_option("--max-moves", o.max_moves, "Moves per seeded game")->default_val(200);
  check->add_option("--report", o.report_path, "Write the JSON report here");
  check->add_flag("--json", o.json, "Print the JSON report instead of the table");

  auto* perft = app.add_subcommand("perft", "Count legal move sequences");
  perft->add_option("game", o.game, "Game id")->required();
  perft->add_option("depth", o.depth, "Depth (at most 6)")->required();

  auto* selfplay = app.add_subcommand("selfplay", "Machine-vs-machine matches");
  selfplay->add_option("game", o.game, "Game id")->required();
  selfplay->add_option("--n", o.matches, "Number of matches")->default_val(100);
  selfplay->add_option("--seed", o.seed, "Base seed");
  selfplay->add_option("--max-moves", o.max_moves, "Move cap per match")->default_val(1000);
  selfplay->add_option("--players", o.players, "Agent tokens (default: random for every seat)");

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--port", o.port, "Port")->default_val(8080);
  serve->add_option("--host", o.host, "Bind address")->default_val("0.0.0.0");
  serve->add_option("--static", o.static_dir, "Directory served at /");

  std::vector<std::string> argv_storage{"boardwalk"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_list(out);
    if (*play) return cmd_play(o, in, out, err);
    if (*replay) return cmd_replay(o, out, err);
    if (*check) return cmd_check(o, out);
    if (*perft) return cmd_perft(o, out);
    if (*selfplay) return cmd_selfplay(o, out);
    if (*serve) return cmd_serve(o, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownGame& e) {
    err << e.what() << '\n';
    return kGameError;
  } catch (const harness::TraceError& e) {
    err << e.what() << '\n';
    return kGameError;
  } catch (const harness::HarnessError& e) {
    err << "harness: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace boardwalk::cli
