#include "stratarg/game.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <string>

#include "stratarg/random.hpp"

namespace stratarg {

namespace {

constexpr std::array<std::string_view, 4> standard_names{"legacy", "min_p", "min_o", "min_both"};

void require_pool_bound(std::size_t pool_size, std::size_t bound) {
  if (pool_size > bound) {
    throw Error(ErrorKind::size_bound_exceeded,
                "subset enumeration over " + std::to_string(pool_size) +
                    " arguments exceeds the bound of " + std::to_string(bound));
  }
}

bool effective_unchecked(const GameState& state, Side player, ArgSet args) {
  return state.split().aim_holds(state.revealed() | args, player);
}

std::vector<ArgIndex> members(ArgSet s) { return {s.begin(), s.end()}; }

}  // namespace

std::string_view to_string(Standard s) { return standard_names[static_cast<std::size_t>(s)]; }

std::optional<Standard> parse_standard(std::string_view text) {
  for (std::size_t i = 0; i < standard_names.size(); ++i) {
    if (standard_names[i] == text) return static_cast<Standard>(i);
  }
  return std::nullopt;
}

bool requires_minimal(Standard standard, Side side) {
  switch (standard) {
    case Standard::legacy: return false;
    case Standard::min_p: return side == Side::proponent;
    case Standard::min_o: return side == Side::opponent;
    case Standard::min_both: return true;
  }
  return false;
}

GameState::GameState(std::shared_ptr<const SplitFramework> split, ArgSet revealed, Side turn)
    : split_(std::move(split)), revealed_(revealed), turn_(turn) {
  if (!split_) throw Error(ErrorKind::invalid_framework, "game state without a framework");
  split_->framework().require_subset(revealed);
  if (!split_->common().subset_of(revealed)) {
    throw Error(ErrorKind::invalid_framework, "revealed set must contain the common pool");
  }
}

GameState GameState::initial(std::shared_ptr<const SplitFramework> split) {
  ArgSet common = split->common();
  return GameState(std::move(split), common, Side::proponent);
}

GameState GameState::initial(SplitFramework split) {
  return initial(std::make_shared<const SplitFramework>(std::move(split)));
}

void require_legal(const GameState& state, const Move& move) {
  if (move.args.empty()) throw Error(ErrorKind::illegal_move, "a move must reveal an argument");
  const auto& af = state.split().framework();
  af.require_subset(move.args);
  for (ArgIndex a : move.args) {
    if (!state.split().pool(move.player).contains(a)) {
      throw Error(ErrorKind::illegal_move, "argument '" + af.id(a) + "' is not " +
                                               std::string(to_string(move.player)) + "'s to play");
    }
    if (state.revealed().contains(a)) {
      throw Error(ErrorKind::illegal_move, "argument '" + af.id(a) + "' is already revealed");
    }
  }
}

bool is_effective(const GameState& state, const Move& move) {
  require_legal(state, move);
  return effective_unchecked(state, move.player, move.args);
}

std::optional<ArgSet> minimality_witness(const GameState& state, const Move& move) {
  if (!is_effective(state, move)) {
    throw Error(ErrorKind::not_effective, "minimality is only defined for effective moves");
  }
  require_pool_bound(move.args.size(), default_move_enumeration_bound);
  auto args = members(move.args);
  const std::uint64_t full = (std::uint64_t{1} << args.size()) - 1;
  std::optional<ArgSet> best;
  for (std::uint64_t m = 1; m < full; ++m) {
    ArgSet sub = expand_subset(args, m);
    if (best && !canonical_less(sub, *best)) continue;
    if (effective_unchecked(state, move.player, sub)) best = sub;
  }
  return best;
}

bool is_minimal(const GameState& state, const Move& move) {
  return !minimality_witness(state, move).has_value();
}

bool has_effective_move(const GameState& state) {
  ArgSet pool = state.unplayed(state.turn());
  require_pool_bound(pool.size(), default_move_enumeration_bound);
  auto args = members(pool);
  const std::uint64_t n = std::uint64_t{1} << args.size();
  for (std::uint64_t m = 1; m < n; ++m) {
    if (effective_unchecked(state, state.turn(), expand_subset(args, m))) return true;
  }
  return false;
}

std::optional<std::size_t> min_effective_size(const GameState& state, std::size_t bound) {
  EffectTable table = effect_table(state, Execution::serial, bound);
  std::optional<std::size_t> best;
  for (std::uint64_t m = 1; m < table.subset_count(); ++m) {
    if (!table.effective[m]) continue;
    std::size_t size = static_cast<std::size_t>(std::popcount(m));
    if (!best || size < *best) best = size;
  }
  return best;
}

EffectTable effect_table(const GameState& state, Execution exec, std::size_t bound) {
  ArgSet pool = state.unplayed(state.turn());
  require_pool_bound(pool.size(), bound);
  EffectTable table;
  table.pool = members(pool);
  const SplitFramework& split = state.split();
  const Side mover = state.turn();
  fill_effect_table(table, state.revealed(),
                    [&split, mover](ArgSet r) { return split.aim_holds(r, mover); }, exec);
  return table;
}

std::vector<Move> effective_moves(const GameState& state, Execution exec, std::size_t bound) {
  EffectTable table = effect_table(state, exec, bound);
  std::vector<Move> out;
  for (std::uint64_t m = 1; m < table.subset_count(); ++m) {
    if (table.effective[m]) out.push_back({state.turn(), table.subset(m)});
  }
  std::sort(out.begin(), out.end(),
            [](const Move& a, const Move& b) { return canonical_less(a.args, b.args); });
  return out;
}

std::vector<Move> minimal_moves(const GameState& state, Execution exec, std::size_t bound) {
  EffectTable table = effect_table(state, exec, bound);
  std::vector<Move> out;
  for (std::uint64_t m : minimal_masks(table, exec)) out.push_back({state.turn(), table.subset(m)});
  std::sort(out.begin(), out.end(),
            [](const Move& a, const Move& b) { return canonical_less(a.args, b.args); });
  return out;
}

std::size_t seeded_choice(const GameState& state, std::uint64_t seed, std::size_t count) {
  std::uint64_t h = fnv1a(to_string(state.turn()));
  for (ArgIndex a : state.revealed()) {
    h = fnv1a(state.split().framework().id(a), h);
    h = fnv1a(",", h);
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  std::mt19937_64 rng(seq);
  return static_cast<std::size_t>(uniform_below(rng, count));
}

std::optional<Move> find_minimal_move(const GameState& state, const MovePolicy& policy) {
  if (policy.kind == MovePolicy::Kind::optimal) {
    throw Error(ErrorKind::invalid_params, "the optimal policy is served by honest_move");
  }
  auto moves = minimal_moves(state);
  if (moves.empty()) return std::nullopt;
  if (policy.kind == MovePolicy::Kind::lex_first) return moves.front();
  return moves[seeded_choice(state, policy.seed, moves.size())];
}

GameState apply_move(const GameState& state, const Move& move) {
  if (move.player != state.turn()) {
    throw Error(ErrorKind::wrong_turn, std::string("it is ") + std::string(to_string(state.turn())) +
                                           "'s turn");
  }
  if (!is_effective(state, move)) {
    throw Error(ErrorKind::ineffective_move, "move does not achieve the mover's aim");
  }
  return state.with(state.revealed() | move.args, other(state.turn()));
}

}  // namespace stratarg
