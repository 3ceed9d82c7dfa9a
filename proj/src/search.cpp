#include "stratarg/search.hpp"

#include <algorithm>
#include <string>

namespace stratarg {

namespace {

// Moves by increasing size; within one size, by decreasing ids.
std::vector<ArgSet> sequence_order(const std::vector<ArgSet>& canonical) {
  std::vector<ArgSet> out(canonical.begin(), canonical.end());
  auto group = out.begin();
  while (group != out.end()) {
    auto end = std::find_if(group, out.end(), [&](ArgSet m) { return m.size() != group->size(); });
    std::reverse(group, end);
    group = end;
  }
  return out;
}

}  // namespace

GameState replay(const GameTrace& trace) {
  GameState state = GameState::initial(trace.split);
  for (const Move& move : trace.moves) state = apply_move(state, move);
  return state;
}

std::optional<Move> Strategy::at(ArgSet revealed) const {
  auto it = moves.find(revealed);
  if (it == moves.end()) return std::nullopt;
  return it->second;
}

Solver::Solver(std::shared_ptr<const SplitFramework> split, std::size_t bound)
    : split_(std::move(split)) {
  const std::size_t n = split_->all().size();
  if (n > bound || n > 26) {
    throw Error(ErrorKind::size_bound_exceeded,
                "search over " + std::to_string(n) + " arguments exceeds the bound of " +
                    std::to_string(std::min<std::size_t>(bound, 26)));
  }
  proponent_aim_.assign(std::size_t{1} << n, -1);
}

bool Solver::aim_holds(ArgSet revealed, Side side) {
  auto& slot = proponent_aim_[revealed.bits()];
  if (slot < 0) slot = split_->aim_holds(revealed, Side::proponent) ? 1 : 0;
  return side == Side::proponent ? slot == 1 : slot == 0;
}

const std::vector<ArgSet>& Solver::moves(ArgSet revealed, Side turn, bool minimal_only) {
  auto& cache = minimal_only ? minimal_cache_ : effective_cache_;
  const std::uint64_t k = key(revealed, turn);
  if (auto it = cache.find(k); it != cache.end()) return it->second;

  EffectTable table;
  ArgSet pool = split_->pool(turn) - revealed;
  table.pool.assign(pool.begin(), pool.end());
  fill_effect_table(table, revealed, [this, turn](ArgSet r) { return aim_holds(r, turn); },
                    Execution::serial);
  std::vector<ArgSet> out;
  if (minimal_only) {
    for (std::uint64_t m : minimal_masks(table, Execution::serial)) out.push_back(table.subset(m));
  } else {
    for (std::uint64_t m = 1; m < table.subset_count(); ++m) {
      if (table.effective[m]) out.push_back(table.subset(m));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return cache.emplace(k, std::move(out)).first->second;
}

const Solver::ValueEntry& Solver::value_entry(ArgSet revealed, Side turn, Standard standard) {
  auto& memo = values_[standard];
  const std::uint64_t k = key(revealed, turn);
  if (auto it = memo.find(k); it != memo.end()) return it->second;

  ValueEntry entry{other(turn), std::nullopt};
  const auto& options = moves(revealed, turn, requires_minimal(standard, turn));
  for (ArgSet m : options) {
    if (value_entry(revealed | m, other(turn), standard).winner == turn) {
      entry = {turn, m};
      break;
    }
  }
  return memo.emplace(k, entry).first->second;
}

Side Solver::game_value(ArgSet revealed, Side turn, Standard standard) {
  return value_entry(revealed, turn, standard).winner;
}

std::optional<ArgSet> Solver::winning_move(ArgSet revealed, Side turn, Standard standard) {
  return value_entry(revealed, turn, standard).witness;
}

bool Solver::sequence_dfs(ArgSet revealed, Side turn, Side winner, Standard standard,
                          std::vector<Move>& path,
                          std::unordered_map<std::uint64_t, bool>& failed) {
  const std::uint64_t k = key(revealed, turn);
  if (failed.contains(k)) return false;
  const auto& options = moves(revealed, turn, requires_minimal(standard, turn));
  if (options.empty()) {
    // No allowed move; with minimality required this also means no effective
    // move, since every effective set contains a minimal one.
    if (other(turn) == winner) return true;
  } else {
    for (ArgSet m : sequence_order(options)) {
      path.push_back({turn, m});
      if (sequence_dfs(revealed | m, other(turn), winner, standard, path, failed)) return true;
      path.pop_back();
    }
  }
  failed.emplace(k, true);
  return false;
}

std::optional<GameTrace> Solver::winning_sequence(Side winner, Standard standard) {
  std::vector<Move> path;
  std::unordered_map<std::uint64_t, bool> failed;
  if (!sequence_dfs(split_->common(), Side::proponent, winner, standard, path, failed)) {
    return std::nullopt;
  }
  return GameTrace{split_, std::move(path), winner};
}

bool Solver::strategy_wins(ArgSet revealed, Side turn, Side owner, Adversary adversary,
                           std::unordered_map<std::uint64_t, std::optional<ArgSet>>& memo) {
  const std::uint64_t k = key(revealed, turn);
  if (auto it = memo.find(k); it != memo.end()) {
    // Owner nodes store their chosen move; adversary nodes store the empty
    // set on success.
    return it->second.has_value();
  }
  std::optional<ArgSet> result;
  if (turn == owner) {
    const auto& options = moves(revealed, turn, true);
    for (ArgSet m : options) {
      if (strategy_wins(revealed | m, other(turn), owner, adversary, memo)) {
        result = m;
        break;
      }
    }
  } else {
    const auto& options =
        moves(revealed, turn, adversary == Adversary::minimal_only);
    result = ArgSet{};
    for (ArgSet m : options) {
      if (!strategy_wins(revealed | m, other(turn), owner, adversary, memo)) {
        result.reset();
        break;
      }
    }
  }
  memo.emplace(k, result);
  return result.has_value();
}

std::optional<Strategy> Solver::winning_strategy(Side owner, Adversary adversary) {
  std::unordered_map<std::uint64_t, std::optional<ArgSet>> memo;
  if (!strategy_wins(split_->common(), Side::proponent, owner, adversary, memo)) {
    return std::nullopt;
  }
  Strategy strategy;
  strategy.owner = owner;
  // Walk the positions consistent with the strategy.
  std::vector<std::pair<ArgSet, Side>> frontier{{split_->common(), Side::proponent}};
  while (!frontier.empty()) {
    auto [revealed, turn] = frontier.back();
    frontier.pop_back();
    if (turn == owner) {
      if (strategy.moves.contains(revealed)) continue;
      ArgSet m = *memo.at(key(revealed, turn));
      strategy.moves.emplace(revealed, Move{owner, m});
      frontier.emplace_back(revealed | m, other(turn));
    } else {
      for (ArgSet m : moves(revealed, turn, adversary == Adversary::minimal_only)) {
        frontier.emplace_back(revealed | m, other(turn));
      }
    }
  }
  return strategy;
}

Side game_value(const GameState& state, Standard standard, std::size_t bound) {
  Solver solver(state.split_ptr(), bound);
  return solver.game_value(state.revealed(), state.turn(), standard);
}

std::optional<GameTrace> winning_sequence(std::shared_ptr<const SplitFramework> split, Side winner,
                                          Standard standard, std::size_t bound) {
  Solver solver(std::move(split), bound);
  return solver.winning_sequence(winner, standard);
}

std::optional<Strategy> winning_strategy(std::shared_ptr<const SplitFramework> split, Side side,
                                         Adversary adversary, std::size_t bound) {
  Solver solver(std::move(split), bound);
  return solver.winning_strategy(side, adversary);
}

bool dominates(const GameState& state, const Move& a, const Move& b, std::size_t bound) {
  for (const Move* m : {&a, &b}) {
    if (m->player != state.turn() || !is_effective(state, *m)) {
      throw Error(ErrorKind::ineffective_move, "dominance compares effective moves of the mover");
    }
  }
  Solver solver(state.split_ptr(), bound);
  const Side mover = state.turn();
  const Side after_a = solver.game_value(state.revealed() | a.args, other(mover), Standard::legacy);
  const Side after_b = solver.game_value(state.revealed() | b.args, other(mover), Standard::legacy);
  return after_a == mover || after_b != mover;
}

}  // namespace stratarg
