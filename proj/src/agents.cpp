#include "stratarg/agents.hpp"

#include <vector>

namespace stratarg {

namespace {

constexpr std::size_t view_solver_limit = 24;

}  // namespace

PlayerView PlayerView::of(const GameState& state) {
  const SplitFramework& split = state.split();
  const ArgumentationFramework& af = split.framework();
  const Side mover = state.turn();
  // The focal argument is public even before it is played.
  ArgSet known = state.revealed() | split.pool(mover) | ArgSet::single(split.focal());

  std::vector<ArgumentId> ids = af.ids_of(known);
  std::vector<Attack> attacks;
  for (auto [a, b] : af.attack_pairs()) {
    if (known.contains(a) && known.contains(b)) attacks.push_back({af.id(a), af.id(b)});
  }
  ArgumentationFramework reduced(ids, attacks);
  auto translate = [&](ArgSet s) { return reduced.set_of(af.ids_of(s & known)); };

  ArgSet proponent = translate(split.pool(Side::proponent));
  ArgSet opponent = translate(split.pool(Side::opponent));
  ArgSet common = translate(split.common());
  ArgIndex focal = reduced.index_of(af.id(split.focal()));
  ArgSet revealed = translate(state.revealed());
  auto view_split = std::make_shared<const SplitFramework>(
      std::move(reduced), common, proponent, opponent, focal, split.semantics(), split.aim(),
      split.options());
  return PlayerView(GameState(std::move(view_split), revealed, mover));
}

std::optional<Move> honest_move(const PlayerView& view, const MovePolicy& policy) {
  const GameState& state = view.state();
  if (policy.kind != MovePolicy::Kind::optimal) return find_minimal_move(state, policy);

  auto moves = minimal_moves(state);
  if (moves.empty()) return std::nullopt;
  if (state.split().all().size() <= view_solver_limit) {
    Solver solver(state.split_ptr(), view_solver_limit);
    for (const Move& m : moves) {
      if (solver.game_value(state.revealed() | m.args, other(state.turn()), Standard::legacy) ==
          state.turn()) {
        return m;
      }
    }
  }
  return moves.front();
}

std::optional<Move> honest_move(const GameState& state, const MovePolicy& policy) {
  PlayerView view = PlayerView::of(state);
  auto chosen = honest_move(view, policy);
  if (!chosen) return std::nullopt;
  const auto& view_af = view.state().split().framework();
  return Move{chosen->player, state.split().framework().set_of(view_af.ids_of(chosen->args))};
}

GameTrace play_match(std::shared_ptr<const SplitFramework> split, const MovePolicy& policy_p,
                     const MovePolicy& policy_o) {
  GameTrace trace{split, {}, Side::opponent};
  GameState state = GameState::initial(split);
  while (true) {
    const MovePolicy& policy = state.turn() == Side::proponent ? policy_p : policy_o;
    auto move = honest_move(state, policy);
    if (!move) {
      trace.winner = other(state.turn());
      return trace;
    }
    trace.moves.push_back(*move);
    state = apply_move(state, *move);
  }
}

std::optional<GameTrace> collusion_script(std::shared_ptr<const SplitFramework> split,
                                          Side designated_winner, Standard standard,
                                          std::size_t bound) {
  return winning_sequence(std::move(split), designated_winner, standard, bound);
}

std::optional<Strategy> espionage_strategy(std::shared_ptr<const SplitFramework> split, Side side,
                                           std::size_t bound) {
  return winning_strategy(std::move(split), side, Adversary::all_effective, bound);
}

}  // namespace stratarg
