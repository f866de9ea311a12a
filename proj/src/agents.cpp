#include "boardwalk/agents.hpp"

#include <vector>

namespace boardwalk::agents {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double score_for(std::optional<PlayerId> winner, PlayerId mover) {
  if (!winner) return 0.5;
  return *winner == mover ? 1.0 : 0.0;
}

double playout(const Game& game, GameState state, PlayerId mover, int max_length,
               std::mt19937_64& rng) {
  for (int moves = 0; moves < max_length; ++moves) {
    if (game.game_finished(state)) return score_for(game.get_winner(state), mover);
    advance(game, state, random_move(game, state, rng));
  }
  if (game.game_finished(state)) return score_for(game.get_winner(state), mover);
  return 0.5;
}

}  // namespace

std::optional<std::string> Agent::next_move(const Game& game, const GameState& state,
                                            PlayerId player) {
  Move move = choose(game, state);
  if (!game.validate_move(state, move, player)) {
    throw ContractViolation("agent chose an illegal move: " + format_move(move));
  }
  return format_move(move);
}

Move random_move(const Game& game, const GameState& state, std::mt19937_64& rng) {
  auto moves = game.legal_moves(state);
  if (moves.empty()) throw ContractViolation(std::string(game.id()) + ": no legal move to choose");
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  return std::move(moves[pick(rng)]);
}

Move RandomAgent::choose(const Game& game, const GameState& state) {
  return random_move(game, state, rng_);
}

FlatMonteCarloAgent::FlatMonteCarloAgent(const AgentConfig& config)
    : Agent(config.seed),
      budget_(config.playout_budget),
      max_playout_length_(config.max_playout_length) {
  if (budget_ < 1) throw std::invalid_argument("flat_mc: playout budget must be >= 1");
  if (max_playout_length_ < 1) throw std::invalid_argument("flat_mc: max playout length must be >= 1");
}

Move FlatMonteCarloAgent::choose(const Game& game, const GameState& state) {
  auto moves = game.legal_moves(state);
  if (moves.empty()) throw ContractViolation(std::string(game.id()) + ": no legal move to choose");
  const PlayerId mover = state.current_player;
  const int per_move = std::max(1, budget_ / static_cast<int>(moves.size()));
  const std::uint64_t base = rng_();

  std::size_t best = 0;
  double best_mean = -1.0;
  std::string best_text;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    // One substream per legal move, indexed by generation order.
    std::mt19937_64 stream(splitmix64(base + i));
    GameState after = state;
    advance(game, after, moves[i]);
    double total = 0.0;
    for (int n = 0; n < per_move; ++n) {
      total += playout(game, after, mover, max_playout_length_, stream);
    }
    const double mean = total / per_move;
    std::string text = format_move(moves[i]);
    if (mean > best_mean || (mean == best_mean && text < best_text)) {
      best = i;
      best_mean = mean;
      best_text = std::move(text);
    }
  }
  return std::move(moves[best]);
}

std::unique_ptr<Agent> make_agent(const AgentConfig& config) {
  if (config.kind == AgentKind::flat_mc) return std::make_unique<FlatMonteCarloAgent>(config);
  return std::make_unique<RandomAgent>(config.seed);
}

GameResult play_match(const Game& game, std::span<Agent* const> agents, int max_moves) {
  std::vector<MoveSource*> sources(agents.begin(), agents.end());
  LoopOptions options;
  options.max_moves = max_moves;
  return run_game_loop(game, sources, options);
}

}  // namespace boardwalk::agents
