#include "boardwalk/harness/diff.hpp"

#include <map>
#include <random>

#include "boardwalk/registry.hpp"

namespace boardwalk::harness {
namespace {

std::string winner_text(std::optional<PlayerId> winner) {
  return winner ? std::to_string(*winner) : "none";
}

std::string describe(const Snapshot& s) {
  std::string text = format_board(s.board);
  for (char& c : text) {
    if (c == '\n') c = ' ';
  }
  text += " | round " + std::to_string(s.round) + ", player " + std::to_string(s.current_player);
  text += s.terminal ? ", over, winner " + winner_text(s.winner) : ", running";
  return text;
}

/// The category of the first difference between two snapshots, if any.
std::optional<ErrorCategory> compare(const Snapshot& expected, const Snapshot& observed,
                                     bool setup) {
  if (expected.board != observed.board) {
    return setup ? ErrorCategory::board : ErrorCategory::effect;
  }
  // A finished game has no meaningful player to move.
  const bool both_over = expected.terminal && observed.terminal;
  if (expected.round != observed.round ||
      (!both_over && expected.current_player != observed.current_player)) {
    return ErrorCategory::turn_order;
  }
  if (expected.terminal != observed.terminal || expected.winner != observed.winner) {
    return ErrorCategory::ending;
  }
  return std::nullopt;
}

Coord random_cell(const Game& game, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> row(0, game.rows() - 1);
  std::uniform_int_distribution<int> col(0, game.cols() - 1);
  return {row(rng), col(rng)};
}

Move random_grammar_move(const Game& game, std::mt19937_64& rng) {
  const std::string_view alphabet = game.piece_alphabet();
  std::uniform_int_distribution<int> verb(0, 9);
  std::uniform_int_distribution<std::size_t> piece(0, alphabet.size() - 1);
  const int v = verb(rng);
  if (v < 4) return Place{alphabet[piece(rng)], random_cell(game, rng)};
  if (v < 5) return PlacePair{random_cell(game, rng), random_cell(game, rng)};
  if (v < 9) return Slide{{random_cell(game, rng), random_cell(game, rng)}, std::nullopt};
  return Pass{};
}

bool in_bounds(const Board& board, const Move& move) {
  if (const auto* place = std::get_if<Place>(&move)) return board.in_bounds(place->at);
  if (const auto* pair = std::get_if<PlacePair>(&move)) {
    return board.in_bounds(pair->first) && board.in_bounds(pair->second);
  }
  if (const auto* slide = std::get_if<Slide>(&move)) {
    for (Coord c : slide->waypoints) {
      if (!board.in_bounds(c)) return false;
    }
  }
  return true;
}

/// A move the rules reject right now, drawn from three pools: moves this
/// player could make on their previous turn (stale moves catch missing
/// compulsions such as forced captures), legal moves with one coordinate
/// nudged, and random grammar moves. nullopt if none was found.
std::optional<Move> illegal_probe(const Game& game, const GameState& state,
                                  const std::vector<Move>& legal, const std::vector<Move>& stale,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pool(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> delta(-1, 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Move move;
    const int source = pool(rng);
    if (source == 0 && !stale.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, stale.size() - 1);
      move = stale[pick(rng)];
    } else if (source == 1) {
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      move = legal[pick(rng)];
      auto nudge = [&](Coord& c) { c = c + Coord{delta(rng), delta(rng)}; };
      if (auto* place = std::get_if<Place>(&move)) {
        nudge(place->at);
      } else if (auto* pair = std::get_if<PlacePair>(&move)) {
        nudge(coin(rng) ? pair->first : pair->second);
      } else if (auto* slide = std::get_if<Slide>(&move)) {
        std::uniform_int_distribution<std::size_t> which(0, slide->waypoints.size() - 1);
        nudge(slide->waypoints[which(rng)]);
      }
    } else {
      move = random_grammar_move(game, rng);
    }
    if (!in_bounds(state.board, move)) continue;
    if (!game.validate_move(state, move, state.current_player)) return move;
  }
  return std::nullopt;
}

class SeedRun {
 public:
  SeedRun(const Game& game, Endpoint& reference, Endpoint& candidate, std::uint64_t seed,
          ComplianceReport& report)
      : game_(game), reference_(reference), candidate_(candidate), seed_(seed), report_(report),
        rng_(seed), state_(game.initial_state()) {}

  void run(int max_moves) {
    bool completed = true;
    try {
      play(max_moves);
    } catch (const CandidateCrash& e) {
      flag(ErrorCategory::crash, "no crash", e.what());
      completed = false;
    } catch (const ProtocolViolation& e) {
      flag(ErrorCategory::api, "protocol-conformant reply", e.what());
      completed = false;
    }
    report_.add_playthrough(completed);
  }

 private:
  void flag(ErrorCategory category, std::string expected, std::string observed) {
    report_.record(category, {"seed " + std::to_string(seed_), step_, std::move(expected),
                              std::move(observed)});
  }

  /// The reference's answer, which must agree with the rules.
  std::optional<Snapshot> reference_play(PlayerId player, const std::string& text, bool legal) {
    std::optional<Snapshot> reply;
    try {
      reply = reference_.play(player, text);
    } catch (const std::exception& e) {
      throw HarnessError("reference failed on '" + text + "': " + e.what());
    }
    if (reply.has_value() != legal) {
      throw HarnessError("reference " + std::string(reply ? "accepted" : "rejected") + " '" + text +
                         "'");
    }
    return reply;
  }

  void play(int max_moves) {
    Snapshot expected = [&] {
      try {
        return reference_.start();
      } catch (const std::exception& e) {
        throw HarnessError(std::string("reference failed to start: ") + e.what());
      }
    }();
    if (expected != snapshot_of(game_, state_)) {
      throw HarnessError("reference initial state differs from the rules");
    }
    const Snapshot observed = candidate_.start();
    if (auto category = compare(expected, observed, true)) {
      flag(*category, describe(expected), describe(observed));
      return;
    }

    for (int moves = 0; moves < max_moves && !game_.game_finished(state_); ++moves) {
      const auto legal = game_.legal_moves(state_);
      if (legal.empty()) throw HarnessError("rules offer no move in a running game");

      auto& stale = last_legal_[static_cast<std::size_t>(state_.current_player)];
      const auto probe = illegal_probe(game_, state_, legal, stale, rng_);
      stale = legal;
      if (probe) {
        ++step_;
        const std::string text = format_move(*probe);
        reference_play(state_.current_player, text, false);
        if (candidate_.play(state_.current_player, text)) {
          flag(ErrorCategory::move, "reject '" + text + "'", "accepted");
          return;
        }
      }

      ++step_;
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      const Move move = legal[pick(rng_)];
      const std::string text = format_move(move);
      const PlayerId mover = state_.current_player;
      advance(game_, state_, move);
      expected = *reference_play(mover, text, true);
      if (expected != snapshot_of(game_, state_)) {
        throw HarnessError("reference state after '" + text + "' differs from the rules");
      }
      const auto observed = candidate_.play(mover, text);
      if (!observed) {
        flag(ErrorCategory::move, "accept '" + text + "'", "rejected");
        return;
      }
      if (auto category = compare(expected, *observed, false)) {
        flag(*category, describe(expected), describe(*observed));
        return;
      }
    }
  }

  const Game& game_;
  Endpoint& reference_;
  Endpoint& candidate_;
  std::uint64_t seed_;
  ComplianceReport& report_;
  std::mt19937_64 rng_;
  GameState state_;
  int step_ = 0;
  std::map<std::size_t, std::vector<Move>> last_legal_;  // per player
};

}  // namespace

ComplianceReport diff_candidates(const std::string& game_id, Endpoint& reference,
                                 Endpoint& candidate, const DiffOptions& options) {
  const auto game = create_game(game_id);
  ComplianceReport report;
  for (std::uint64_t seed : options.seeds) {
    SeedRun(*game, reference, candidate, seed, report).run(options.max_moves);
  }
  return report;
}

}  // namespace boardwalk::harness
