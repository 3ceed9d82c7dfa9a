#pragma once

#include <memory>
#include <optional>

#include "stratarg/search.hpp"

namespace stratarg {

/// The game as the player to move sees it: revealed arguments plus the mover's own
/// private pool. The opponent's unplayed arguments (and their attacks) are
/// absent, so nothing computed from a view can depend on them.
class PlayerView {
 public:
  static PlayerView of(const GameState& state);

  const GameState& state() const { return state_; }
  Side mover() const { return state_.turn(); }

 private:
  explicit PlayerView(GameState state) : state_(std::move(state)) {}
  GameState state_;
};

/// Minimal effective move chosen by `policy` from the view alone. The
/// optimal policy solves the view's game, in which the opponent has nothing
/// left to play, and takes the first winning minimal move.
std::optional<Move> honest_move(const PlayerView& view, const MovePolicy& policy);
/// Same choice, expressed in the indices of the full game.
std::optional<Move> honest_move(const GameState& state, const MovePolicy& policy);

/// Honest self-play until the side to move has no effective move.
GameTrace play_match(std::shared_ptr<const SplitFramework> split, const MovePolicy& policy_p,
                     const MovePolicy& policy_o);

/// Script a colluding pair replays so `designated_winner` wins.
std::optional<GameTrace> collusion_script(std::shared_ptr<const SplitFramework> split,
                                          Side designated_winner, Standard standard,
                                          std::size_t bound = default_search_bound);

/// Winning strategy available to a spy who knows both private pools.
std::optional<Strategy> espionage_strategy(std::shared_ptr<const SplitFramework> split, Side side,
                                           std::size_t bound = default_search_bound);

}  // namespace stratarg
