#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stratarg/game.hpp"

namespace stratarg {

inline constexpr std::size_t default_search_bound = 16;

/// A recorded game: alternating moves starting with the proponent.
struct GameTrace {
  std::shared_ptr<const SplitFramework> split;
  std::vector<Move> moves;
  Side winner = Side::proponent;
};

/// Replays every move through `apply_move`; throws on the first bad move.
GameState replay(const GameTrace& trace);

struct CanonicalLess {
  bool operator()(ArgSet a, ArgSet b) const { return canonical_less(a, b); }
};

/// Moves prescribed to `owner` at each position (keyed by revealed set)
/// reachable when the owner follows the strategy.
struct Strategy {
  Side owner = Side::proponent;
  std::map<ArgSet, Move, CanonicalLess> moves;

  std::optional<Move> at(ArgSet revealed) const;
};

/// What the adversary of a strategy may play.
enum class Adversary { all_effective, minimal_only };

/// Exact solver for one split framework. Memoizes aim checks, move lists and
/// game values over (revealed set, side to move); not thread-safe.
class Solver {
 public:
  explicit Solver(std::shared_ptr<const SplitFramework> split,
                  std::size_t bound = default_search_bound);

  const SplitFramework& split() const { return *split_; }
  const std::shared_ptr<const SplitFramework>& split_ptr() const { return split_; }

  bool aim_holds(ArgSet revealed, Side side);
  /// Effective (or, with `minimal_only`, minimal effective) moves of `turn`
  /// at `revealed`, canonical order.
  const std::vector<ArgSet>& moves(ArgSet revealed, Side turn, bool minimal_only);

  /// Winner under optimal play when each side is limited to the moves the
  /// standard allows it.
  Side game_value(ArgSet revealed, Side turn, Standard standard);
  /// A move realising the value for the side to move, when it wins.
  std::optional<ArgSet> winning_move(ArgSet revealed, Side turn, Standard standard);

  std::optional<GameTrace> winning_sequence(Side winner, Standard standard);
  std::optional<Strategy> winning_strategy(Side owner, Adversary adversary);

 private:
  struct ValueEntry {
    Side winner;
    std::optional<ArgSet> witness;
  };

  static std::uint64_t key(ArgSet revealed, Side turn) {
    return (revealed.bits() << 1) | (turn == Side::opponent ? 1U : 0U);
  }

  const ValueEntry& value_entry(ArgSet revealed, Side turn, Standard standard);
  bool sequence_dfs(ArgSet revealed, Side turn, Side winner, Standard standard,
                    std::vector<Move>& path,
                    std::unordered_map<std::uint64_t, bool>& failed);
  bool strategy_wins(ArgSet revealed, Side turn, Side owner, Adversary adversary,
                     std::unordered_map<std::uint64_t, std::optional<ArgSet>>& memo);

  std::shared_ptr<const SplitFramework> split_;
  std::vector<std::int8_t> proponent_aim_;
  std::unordered_map<std::uint64_t, std::vector<ArgSet>> effective_cache_;
  std::unordered_map<std::uint64_t, std::vector<ArgSet>> minimal_cache_;
  std::map<Standard, std::unordered_map<std::uint64_t, ValueEntry>> values_;
};

Side game_value(const GameState& state, Standard standard,
                std::size_t bound = default_search_bound);

/// Cooperative trace won by `winner` in which each move is effective and the
/// sides named by `standard` play minimal moves. Depth-first over each
/// mover's options, smaller moves first and, within one size, later ids
/// first; the first trace found is returned, so results are reproducible.
std::optional<GameTrace> winning_sequence(std::shared_ptr<const SplitFramework> split, Side winner,
                                          Standard standard,
                                          std::size_t bound = default_search_bound);

/// A strategy for `side` using only minimal moves that wins against every
/// adversary reply allowed by `adversary`.
std::optional<Strategy> winning_strategy(std::shared_ptr<const SplitFramework> split, Side side,
                                         Adversary adversary,
                                         std::size_t bound = default_search_bound);

/// Whether, for the player to move, `a` leads to an outcome at least as good
/// as `b` under optimal legacy continuation. Both must be effective.
bool dominates(const GameState& state, const Move& a, const Move& b,
               std::size_t bound = default_search_bound);

}  // namespace stratarg
