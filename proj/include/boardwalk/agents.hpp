#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "boardwalk/loop.hpp"

namespace boardwalk::agents {

enum class AgentKind { random, flat_mc };

struct AgentConfig {
  AgentKind kind = AgentKind::random;
  std::uint64_t seed = 0;
  int playout_budget = 1000;       // flat_mc only
  int max_playout_length = 1000;   // moves after the candidate move
};

/// A machine player. Every move it hands to the loop is checked against
/// validate_move first; an illegal choice raises ContractViolation.
class Agent : public MoveSource {
 public:
  explicit Agent(std::uint64_t seed) : rng_(seed) {}

  /// Throws ContractViolation when there is no legal move.
  virtual Move choose(const Game& game, const GameState& state) = 0;

  std::optional<std::string> next_move(const Game& game, const GameState& state,
                                       PlayerId player) override;

 protected:
  std::mt19937_64 rng_;
};

/// Uniform choice among legal_moves.
class RandomAgent final : public Agent {
 public:
  using Agent::Agent;
  Move choose(const Game& game, const GameState& state) override;
};

/// Flat Monte Carlo: budget / |moves| random playouts per legal move (at
/// least one), scored 1 / 0.5 / 0 for a win / draw or capped playout / loss
/// of the mover. Highest mean wins; ties go to the lexicographically least
/// move text.
class FlatMonteCarloAgent final : public Agent {
 public:
  explicit FlatMonteCarloAgent(const AgentConfig& config);
  Move choose(const Game& game, const GameState& state) override;

 private:
  int budget_;
  int max_playout_length_;
};

std::unique_ptr<Agent> make_agent(const AgentConfig& config);

/// Uniformly random legal move; throws ContractViolation if there is none.
Move random_move(const Game& game, const GameState& state, std::mt19937_64& rng);

/// Plays `agents[p]` for player p until the game ends or `max_moves` moves
/// have been made (result status move_cap).
GameResult play_match(const Game& game, std::span<Agent* const> agents, int max_moves);

}  // namespace boardwalk::agents
