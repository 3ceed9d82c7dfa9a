#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "stratarg/kernels.hpp"
#include "stratarg/policy.hpp"
#include "stratarg/split.hpp"

namespace stratarg {

/// Largest private pool whose subsets are enumerated exhaustively.
inline constexpr std::size_t default_move_enumeration_bound = 20;

/// Which sides must play minimal moves. `legacy` only asks for effectiveness.
enum class Standard { legacy, min_p, min_o, min_both };

std::string_view to_string(Standard s);
std::optional<Standard> parse_standard(std::string_view text);
bool requires_minimal(Standard standard, Side side);

struct Move {
  Side player = Side::proponent;
  ArgSet args;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Revealed arguments and the side to move. Immutable; `apply_move` returns a
/// successor state.
class GameState {
 public:
  GameState(std::shared_ptr<const SplitFramework> split, ArgSet revealed, Side turn);

  /// Common pool revealed, proponent to move.
  static GameState initial(std::shared_ptr<const SplitFramework> split);
  static GameState initial(SplitFramework split);

  const SplitFramework& split() const { return *split_; }
  const std::shared_ptr<const SplitFramework>& split_ptr() const { return split_; }
  ArgSet revealed() const { return revealed_; }
  Side turn() const { return turn_; }
  /// Private arguments `side` has not played yet.
  ArgSet unplayed(Side side) const { return split_->pool(side) - revealed_; }

  GameState with(ArgSet revealed, Side turn) const { return GameState(split_, revealed, turn); }

 private:
  std::shared_ptr<const SplitFramework> split_;
  ArgSet revealed_;
  Side turn_;
};

/// Throws `illegal_move` unless `move.args` is a nonempty set of the
/// player's unplayed private arguments.
void require_legal(const GameState& state, const Move& move);

bool is_effective(const GameState& state, const Move& move);

/// Requires an effective move (`not_effective` otherwise).
bool is_minimal(const GameState& state, const Move& move);
/// Canonically first effective nonempty proper subset, if any.
std::optional<ArgSet> minimality_witness(const GameState& state, const Move& move);

bool has_effective_move(const GameState& state);

/// Size of the smallest effective move of the player to move, if any.
std::optional<std::size_t> min_effective_size(const GameState& state,
                                              std::size_t bound = default_move_enumeration_bound);

/// Effectiveness of every subset of the mover's unplayed pool.
EffectTable effect_table(const GameState& state, Execution exec = Execution::serial,
                         std::size_t bound = default_move_enumeration_bound);

/// All effective moves of the player to move, canonical order.
std::vector<Move> effective_moves(const GameState& state, Execution exec = Execution::serial,
                                  std::size_t bound = default_move_enumeration_bound);
/// Minimal effective moves of the player to move, canonical order.
std::vector<Move> minimal_moves(const GameState& state, Execution exec = Execution::serial,
                                std::size_t bound = default_move_enumeration_bound);

/// Picks a minimal move by `lex_first` or `seeded_random`. The optimal
/// policy needs the solver and lives with the agents.
std::optional<Move> find_minimal_move(const GameState& state, const MovePolicy& policy);

/// Index into `count` choices for a seeded random pick at `state`. Depends
/// only on the seed, the turn and the ids of revealed arguments.
std::size_t seeded_choice(const GameState& state, std::uint64_t seed, std::size_t count);

/// Throws `wrong_turn`, `illegal_move` or `ineffective_move`.
GameState apply_move(const GameState& state, const Move& move);

}  // namespace stratarg
