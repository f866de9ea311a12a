#include "boardwalk/loop.hpp"

#include <istream>
#include <ostream>

namespace boardwalk {

std::optional<std::string> StreamMoveSource::next_move(const Game&, const GameState&, PlayerId) {
  std::string line;
  if (!std::getline(*in_, line)) return std::nullopt;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::optional<std::string> ScriptedMoveSource::next_move(const Game&, const GameState&,
                                                         PlayerId) {
  if (next_ >= lines_.size()) return std::nullopt;
  return lines_[next_++];
}

void render_board(std::ostream& out, const Board& board) {
  out << '\n' << format_board(board) << '\n';
}

GameResult run_game_loop(const Game& game, std::span<MoveSource* const> sources,
                         const LoopOptions& options) {
  return run_game_loop(game, game.initial_state(), sources, options);
}

GameResult run_game_loop(const Game& game, GameState state, std::span<MoveSource* const> sources,
                         const LoopOptions& options) {
  if (static_cast<int>(sources.size()) < game.player_count()) {
    throw ContractViolation("run_game_loop: need one move source per player");
  }
  GameResult result{state, std::nullopt, {}, 0, LoopStatus::finished, 0, 0};
  std::ostream* out = options.out;

  auto finish = [&](LoopStatus status) {
    result.status = status;
    result.rounds_played = static_cast<int>(result.move_log.size());
    if (status == LoopStatus::finished) {
      result.winner = game.get_winner(state);
      if (out) {
        render_board(*out, state.board);
        *out << "winner: " << (result.winner ? std::to_string(*result.winner) : "none") << '\n';
      }
    }
    result.final_state = std::move(state);
    return result;
  };

  while (!game.game_finished(state)) {
    if (static_cast<int>(result.move_log.size()) >= options.max_moves) {
      return finish(LoopStatus::move_cap);
    }
    if (out) render_board(*out, state.board);

    const PlayerId player = state.current_player;
    std::optional<Move> accepted;
    while (!accepted) {
      if (out) *out << "player " << player << " move> " << std::flush;
      ++result.prompts;
      auto text = sources[static_cast<std::size_t>(player)]->next_move(game, state, player);
      if (!text) return finish(LoopStatus::input_exhausted);
      auto move = try_parse_move(*text);
      if (move && game.validate_move(state, *move, player)) {
        accepted = std::move(move);
      } else {
        ++result.rejected_inputs;
        if (out) *out << "invalid move\n";
      }
    }
    advance(game, state, *accepted);
    result.move_log.emplace_back(player, std::move(*accepted));
  }
  return finish(LoopStatus::finished);
}

}  // namespace boardwalk
