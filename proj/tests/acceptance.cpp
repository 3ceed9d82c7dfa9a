// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from the brute-force oracles in
// oracles.hpp, never from the engine under test.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "stratarg/agents.hpp"
#include "stratarg/audit.hpp"
#include "stratarg/cli.hpp"
#include "stratarg/formats.hpp"
#include "stratarg/semantics.hpp"

using namespace testing;

namespace {

/// Failures collected across (possibly parallel) instance checks.
class Tally {
 public:
  void fail(const std::string& what) {
    std::lock_guard lock(mutex_);
    if (failures_++ < 3) examples_.push_back(what);
  }
  std::size_t failures() const { return failures_; }
  std::string summary() const {
    std::string out;
    for (const auto& e : examples_) out += "\n    e.g. " + e;
    return out;
  }

 private:
  std::mutex mutex_;
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

/// Runs `check(i)` for i in [0, n) across OpenMP threads. `check` returns
/// an empty string on success, otherwise a description of the failure.
void for_instances(std::size_t n, Tally& tally, const std::function<std::string(std::size_t)>& check) {
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    std::string problem;
    try {
      problem = check(static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem.empty()) tally.fail("instance " + std::to_string(i) + ": " + problem);
  }
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Cli {
  int code;
  std::string out;
};

Cli cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

NameLists trace_names(const GameTrace& t) { return names(t.split->framework(), t.moves); }

std::string render(const NameLists& moves) {
  std::string out;
  for (const auto& m : moves) {
    out += "{";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + m[i];
    out += "}";
  }
  return out;
}

double probability_for(std::size_t i) {
  static const double ps[] = {0.1, 0.2, 0.3, 0.4, 0.5};
  return ps[i % 5];
}

/// Split frameworks with at most 8 arguments spread over both semantics
/// and the existential and universal aims.
std::shared_ptr<const SplitFramework> small_game(std::size_t i) {
  GeneratorParams params;
  params.n_common = i % 2;
  params.n_p = 2 + (i / 2) % 3;
  params.n_o = std::min<std::size_t>(2 + (i / 6) % 3, 8 - params.n_common - params.n_p);
  params.attack_probability = 0.2 + 0.05 * static_cast<double>(i % 5);
  params.seed = 5000 + i;
  params.semantics = (i / 2) % 2 ? Semantics::stable : Semantics::grounded;
  params.aim = i % 4 < 2 ? Aim::existential : Aim::universal;
  return shared(random_split(params));
}

// 1 ------------------------------------------------------------------------
Outcome semantics_oracle() {
  Tally grounded, stable;
  for_instances(500, grounded, [](std::size_t i) -> std::string {
    auto af = random_framework(1 + i % 8, probability_for(i), 100 + i);
    auto l = grounded_labeling(af);
    std::uint64_t least = oracle::least_complete(af);
    std::uint64_t rejected = 0;
    for (ArgIndex a = 0; a < af.size(); ++a) {
      if (oracle::attacked_by_set(af, least, a)) rejected |= std::uint64_t{1} << a;
    }
    std::uint64_t undecided = af.all().bits() & ~least & ~rejected;
    if (l.accepted.bits() != least || l.rejected.bits() != rejected || l.undecided.bits() != undecided) {
      return "grounded labeling differs from least complete extension";
    }
    return {};
  });
  for_instances(500, stable, [](std::size_t i) -> std::string {
    auto af = random_framework(1 + i % 12, probability_for(i), 900 + i);
    std::vector<std::uint64_t> engine;
    for (auto e : stable_extensions(af)) engine.push_back(e.bits());
    std::sort(engine.begin(), engine.end());
    auto expected = oracle::stable_extensions(af);
    std::sort(expected.begin(), expected.end());
    return engine == expected ? std::string() : "stable extensions differ from subset filter";
  });
  Outcome o;
  o.pass = grounded.failures() == 0 && stable.failures() == 0;
  o.detail = "500 grounded (<=8 args): " + std::to_string(grounded.failures()) + " mismatches; 500 stable (<=12 args): " +
             std::to_string(stable.failures()) + " mismatches" + grounded.summary() + stable.summary();
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome example_one() {
  Outcome o;
  std::vector<std::string> notes;
  auto saf8 = fixture_ptr("saf8");
  auto honest = play_match(saf8, MovePolicy::lex_first(), MovePolicy::lex_first());
  bool honest_ok = trace_names(honest) == NameLists{{"A"}, {"B1"}, {"C"}, {"D"}} && honest.winner == O;
  notes.push_back("honest " + render(trace_names(honest)) + " winner " + std::string(to_string(honest.winner)));

  auto legacy = cli({"search-seq", "--split", "fixture:saf8", "--winner", "p", "--standard", "legacy"});
  bool legacy_ok = legacy.code == 0 && contains(legacy.out, "move P A\nmove O B1 B2\nmove P C\nwinner P\n");
  auto lib = winning_sequence(saf8, P, Standard::legacy);
  legacy_ok = legacy_ok && lib && trace_names(*lib) == NameLists{{"A"}, {"B1", "B2"}, {"C"}};
  notes.push_back(std::string("legacy collusion ") + (lib ? render(trace_names(*lib)) : "none"));

  auto min_o = cli({"search-seq", "--split", "fixture:saf8", "--winner", "p", "--standard", "min_o"});
  bool min_o_ok = min_o.code == 1 && min_o.out == "none\n" && !winning_sequence(saf8, P, Standard::min_o);
  notes.push_back(std::string("min_o ") + (min_o_ok ? "none" : "unexpected result"));

  o.pass = honest_ok && legacy_ok && min_o_ok;
  for (const auto& n : notes) o.detail += (o.detail.empty() ? "" : "; ") + n;
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome example_three() {
  auto saf16 = fixture_ptr("saf16");
  auto at = state_at(saf16, {"A", "B1", "B2", "C1", "C2"}, O);
  auto after = [&](std::initializer_list<std::string_view> ids) {
    return game_value(apply_move(at, move_of(*saf16, O, ids)), Standard::legacy);
  };
  Side e = after({"E"}), d1 = after({"D1"}), d12 = after({"D1", "D2"});
  Outcome o;
  o.pass = e == P && d1 == O && d12 == O;
  o.detail = std::string("after {E}: ") + std::string(to_string(e)) + " wins; after {D1}: " +
             std::string(to_string(d1)) + "; after {D1,D2}: " + std::string(to_string(d12));
  return o;
}

// 4 ------------------------------------------------------------------------
Outcome ah_collusion() {
  Outcome o;
  auto ah = fixture_ptr("ah");
  const NameLists canonical{{"A"}, {"E"}, {"H"}, {"B"}, {"C"}, {"D"}};
  auto run = cli({"search-seq", "--split", "fixture:ah", "--winner", "o", "--standard", "min_both"});
  bool cli_ok = run.code == 0 && contains(run.out, "move P A\nmove O E\nmove P H\nmove O B\nmove P C\nmove O D\nwinner O\n");

  auto trace = winning_sequence(ah, O, Standard::min_both);
  bool trace_ok = trace && trace_names(*trace) == canonical && trace->winner == O;
  bool audit_ok = false;
  bool advisory_ok = false;
  if (trace) {
    auto report = audit_trace(*trace, Standard::min_both);
    audit_ok = report.compliant();
    const auto& af = ah->framework();
    std::size_t h_move = 0;
    for (std::size_t i = 0; i < trace->moves.size(); ++i) {
      if (trace->moves[i].args.contains(af.index_of("H"))) h_move = i + 1;
    }
    for (const auto& adv : report.advisories) {
      for (auto [a, b] : adv.attacked_own) {
        if (adv.index == h_move && a == af.index_of("H") && b == af.index_of("F")) advisory_ok = true;
      }
    }
  }
  Side legacy = game_value(GameState::initial(ah), Standard::legacy);
  Side min_both = game_value(GameState::initial(ah), Standard::min_both);
  o.pass = cli_ok && trace_ok && audit_ok && advisory_ok && legacy == P && min_both == P;
  o.detail = "trace " + (trace ? render(trace_names(*trace)) : std::string("none")) + (cli_ok ? " (cli ok)" : " (cli mismatch)") +
             "; audit " + (audit_ok ? "compliant" : "not compliant") + "; H->F advisory " +
             (advisory_ok ? "present" : "missing") + "; value legacy " + std::string(to_string(legacy)) +
             ", min_both " + std::string(to_string(min_both));
  return o;
}

// 5 and 6 ----------------------------------------------------------------
constexpr std::size_t dominance_instances = 400;

/// Every state reachable from the start with effective moves.
std::vector<GameState> reachable_states(const std::shared_ptr<const SplitFramework>& split) {
  std::vector<GameState> out;
  std::set<std::pair<std::uint64_t, int>> seen;
  std::vector<GameState> frontier{GameState::initial(split)};
  while (!frontier.empty()) {
    GameState st = frontier.back();
    frontier.pop_back();
    if (!seen.insert({st.revealed().bits(), st.turn() == P ? 0 : 1}).second) continue;
    out.push_back(st);
    for (const auto& m : effective_moves(st)) frontier.push_back(apply_move(st, m));
  }
  return out;
}

Outcome dominance() {
  Tally tally;
  std::atomic<std::size_t> states{0}, checked{0};
  for_instances(dominance_instances, tally, [&](std::size_t i) -> std::string {
    auto split = small_game(i);
    for (const GameState& st : reachable_states(split)) {
      ++states;
      auto minimal = minimal_moves(st);
      for (const auto& m : effective_moves(st)) {
        if (is_minimal(st, m)) continue;
        ++checked;
        bool dominated = false;
        for (const auto& mm : minimal) {
          if (mm.args.subset_of(m.args) && dominates(st, mm, m)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) {
          const auto& af = split->framework();
          return "move " + render({af.ids_of(m.args)}) + " at " + render({af.ids_of(st.revealed())}) +
                 " has no dominating minimal subset";
        }
      }
    }
    return {};
  });
  Outcome o;
  o.pass = tally.failures() == 0 && checked > 0;
  o.detail = std::to_string(dominance_instances) + " instances, " + std::to_string(states.load()) +
             " reachable states, " + std::to_string(checked.load()) + " non-minimal moves; " +
             std::to_string(tally.failures()) + " counterexamples" + tally.summary();
  return o;
}

Outcome winner_invariance() {
  Tally tally;
  std::atomic<std::size_t> p_wins{0}, states{0};
  for_instances(dominance_instances, tally, [&](std::size_t i) -> std::string {
    auto split = small_game(i);
    Side legacy = game_value(GameState::initial(split), Standard::legacy);
    Side min_both = game_value(GameState::initial(split), Standard::min_both);
    if (legacy == P) ++p_wins;
    if (legacy != min_both) return "legacy and min_both values differ";
    // The same holds from every reachable position, not just the start.
    Solver solver(split);
    for (const GameState& st : reachable_states(split)) {
      ++states;
      if (solver.game_value(st.revealed(), st.turn(), Standard::legacy) !=
          solver.game_value(st.revealed(), st.turn(), Standard::min_both)) {
        return "values differ at a reachable position";
      }
    }
    return {};
  });
  Outcome o;
  o.pass = tally.failures() == 0;
  o.detail = std::to_string(dominance_instances) + " instances (" + std::to_string(p_wins.load()) +
             " proponent wins, " + std::to_string(states.load()) + " reachable positions also compared); " +
             std::to_string(tally.failures()) + " mismatches" + tally.summary();
  return o;
}

// 7 ------------------------------------------------------------------------
Outcome aim_collapse() {
  Tally tally;
  const Aim aims[] = {Aim::existential, Aim::universal, Aim::uncontested, Aim::plurality, Aim::majority,
                      Aim::supermajority};
  for_instances(500, tally, [&](std::size_t i) -> std::string {
    auto af = random_framework(1 + i % 9, probability_for(i), 20000 + i);
    for (ArgIndex f = 0; f < af.size(); ++f) {
      bool ex = verify_aim(af, af.all(), Semantics::grounded, Aim::existential, f, P);
      for (Aim aim : aims) {
        if (verify_aim(af, af.all(), Semantics::grounded, aim, f, P) != ex) {
          return "grounded " + std::string(to_string(aim)) + " differs from existential";
        }
      }
      if (verify_aim(af, af.all(), Semantics::stable, Aim::plurality, f, P) !=
          verify_aim(af, af.all(), Semantics::stable, Aim::majority, f, P)) {
        return "stable plurality differs from majority";
      }
    }
    for (auto e : stable_extensions(af)) {
      if (!labeling_of(af, e).undecided.empty()) return "stable labeling has undecided arguments";
    }
    return {};
  });
  Outcome o;
  o.pass = tally.failures() == 0;
  o.detail = "500 frameworks; " + std::to_string(tally.failures()) + " violations" + tally.summary();
  return o;
}

// 8 ------------------------------------------------------------------------
Outcome well_founded() {
  Tally tally;
  for_instances(200, tally, [](std::size_t i) -> std::string {
    auto af = random_framework(1 + i % 12, probability_for(i) + 0.1, 30000 + i, true);
    if (!is_well_founded(af)) return "generated framework has a cycle";
    auto complete = oracle::complete_extensions(af);
    if (complete.size() != 1) return std::to_string(complete.size()) + " complete extensions";
    auto stable = stable_extensions(af);
    auto l = grounded_labeling(af);
    if (l.accepted.bits() != complete[0]) return "grounded extension differs";
    if (stable.size() != 1 || stable[0].bits() != complete[0]) return "stable extension differs";
    if (!l.undecided.empty()) return "undecided arguments remain";
    return {};
  });
  Outcome o;
  o.pass = tally.failures() == 0;
  o.detail = "200 acyclic frameworks; " + std::to_string(tally.failures()) + " violations" + tally.summary();
  return o;
}

// 9 ------------------------------------------------------------------------
MovePolicy policy_for(std::size_t i, Side side) {
  switch ((i + (side == P ? 0 : 1)) % 3) {
    case 0: return MovePolicy::lex_first();
    case 1: return MovePolicy::seeded_random(i * 31 + 7);
    default: return MovePolicy::optimal();
  }
}

/// Moves that can be inflated: (move index, unplayed own argument) pairs
/// whose union with the move is still effective.
std::vector<std::pair<std::size_t, ArgIndex>> inflations(const GameTrace& trace,
                                                         const std::vector<GameState>& before) {
  std::vector<std::pair<std::size_t, ArgIndex>> out;
  for (std::size_t k = 0; k < trace.moves.size(); ++k) {
    const Move& m = trace.moves[k];
    for (ArgIndex x : before[k].unplayed(m.player) - m.args) {
      if (is_effective(before[k], Move{m.player, m.args | ArgSet::single(x)})) out.push_back({k, x});
    }
  }
  return out;
}

std::vector<GameState> states_before(const GameTrace& trace) {
  std::vector<GameState> out{GameState::initial(trace.split)};
  for (const auto& m : trace.moves) out.push_back(apply_move(out.back(), m));
  return out;
}

GameTrace honest_trace(std::size_t i) {
  GeneratorParams params;
  params.n_common = i % 3 == 0 ? 1 : 0;
  params.n_p = 3 + i % 2;
  params.n_o = 3 + (i / 2) % 2;
  params.attack_probability = 0.25 + 0.05 * static_cast<double>(i % 4);
  params.seed = 40000 + i;
  params.semantics = i % 5 == 0 ? Semantics::stable : Semantics::grounded;
  auto split = shared(random_split(params));
  return play_match(split, policy_for(i, P), policy_for(i, O));
}

Outcome auditor() {
  constexpr std::size_t wanted = 200;
  // Honest playouts are drawn until 200 admit all three mutations (at least
  // one move, and one move that can be inflated). Every playout drawn,
  // used or not, must audit compliant.
  std::vector<GameTrace> traces;
  std::size_t drawn = 0, skipped = 0, honest_flagged = 0;
  for (std::size_t i = 0; traces.size() < wanted; ++i) {
    GameTrace t = honest_trace(i);
    ++drawn;
    if (!audit_trace(t, Standard::min_both).compliant()) ++honest_flagged;
    if (t.moves.empty() || inflations(t, states_before(t)).empty()) {
      ++skipped;
      continue;
    }
    traces.push_back(std::move(t));
  }

  Tally tally;
  for_instances(traces.size(), tally, [&](std::size_t i) -> std::string {
    const GameTrace& honest = traces[i];
    const auto& split = honest.split;
    std::mt19937_64 rng(77 + i);
    auto before = states_before(honest);

    // Inflate: add an unplayed own argument that keeps the move effective.
    auto options = inflations(honest, before);
    auto [k_inf, x] = options[rng() % options.size()];
    GameTrace inflated = honest;
    inflated.moves[k_inf].args.insert(x);
    auto r = audit_trace(inflated, Standard::min_both);
    if (!r.has_violation(ViolationKind::non_minimal, k_inf + 1)) return "inflation not flagged";
    const auto& rec = r.per_move.at(k_inf);
    if (!rec.witness || !rec.witness->proper_subset_of(inflated.moves[k_inf].args) ||
        !is_effective(before[k_inf], Move{inflated.moves[k_inf].player, *rec.witness})) {
      return "inflation witness invalid";
    }

    // Truncate: drop the final move, keep the claimed winner.
    GameTrace truncated = honest;
    truncated.moves.pop_back();
    if (!audit_trace(truncated, Standard::min_both).has_violation(ViolationKind::premature_surrender)) {
      return "truncation not flagged";
    }

    // Swap: replace one argument of a move by one the mover does not own.
    std::size_t k = rng() % honest.moves.size();
    GameTrace swapped = honest;
    Move& m = swapped.moves[k];
    std::vector<ArgIndex> mine(m.args.begin(), m.args.end());
    ArgSet foreign_pool = split->pool(other(m.player));
    std::vector<ArgIndex> foreign(foreign_pool.begin(), foreign_pool.end());
    m.args.erase(mine[rng() % mine.size()]);
    m.args.insert(foreign[rng() % foreign.size()]);
    if (!audit_trace(swapped, Standard::min_both).has_violation(ViolationKind::unowned_argument, k + 1)) {
      return "unowned argument not flagged";
    }
    return {};
  });

  Outcome o;
  o.pass = tally.failures() == 0 && honest_flagged == 0;
  o.detail = std::to_string(drawn) + " honest playouts audited, " + std::to_string(honest_flagged) +
             " flagged; " + std::to_string(traces.size()) + " mutated 3 ways (" + std::to_string(skipped) +
             " playouts without an inflatable move skipped); " + std::to_string(tally.failures()) + " missed" +
             tally.summary();
  return o;
}

// 10 -----------------------------------------------------------------------
std::string trace_round_trip(const GameTrace& trace, const std::string& ref) {
  auto text = serialize_trace(to_document(trace, ref));
  auto doc = parse_trace(text);
  if (serialize_trace(doc) != text) return "trace text changed";
  auto back = to_trace(doc, *trace.split);
  if (back.moves != trace.moves || back.winner != trace.winner) return "trace moves changed";
  return {};
}

std::string split_round_trip(const SplitFramework& split) {
  auto text = serialize_saf(split);
  auto parsed = parse_saf(text);
  if (serialize_saf(parsed) != text) return "framework text changed";
  if (!(parsed == split)) return "framework changed";
  return {};
}

Outcome round_trip() {
  Tally tally;
  const auto& names = fixture_names();
  for_instances(names.size(), tally, [&](std::size_t i) -> std::string {
    auto split = fixture_ptr(names[i]);
    if (auto p = split_round_trip(*split); !p.empty()) return names[i] + ": " + p;
    auto honest = play_match(split, MovePolicy::lex_first(), MovePolicy::lex_first());
    if (auto p = trace_round_trip(honest, "fixture:" + names[i]); !p.empty()) return names[i] + ": " + p;
    for (Side winner : {P, O}) {
      if (auto t = winning_sequence(split, winner, Standard::legacy)) {
        if (auto p = trace_round_trip(*t, "fixture:" + names[i]); !p.empty()) return names[i] + ": " + p;
      }
    }
    return {};
  });
  const Aim aims[] = {Aim::existential, Aim::universal,  Aim::unrejected,   Aim::uncontested,
                      Aim::plurality,   Aim::majority,   Aim::supermajority};
  for_instances(100, tally, [&](std::size_t i) -> std::string {
    GeneratorParams params;
    params.n_common = i % 3;
    params.n_p = 1 + i % 4;
    params.n_o = 1 + (i / 4) % 4;
    params.attack_probability = probability_for(i);
    params.seed = 60000 + i;
    params.acyclic_only = i % 7 == 0;
    params.self_attacks = i % 5 == 0;
    params.semantics = i % 2 ? Semantics::stable : Semantics::grounded;
    params.aim = aims[i % 7];
    auto split = shared(random_split(params));
    if (auto p = split_round_trip(*split); !p.empty()) return p;
    auto honest = play_match(split, MovePolicy::seeded_random(i), MovePolicy::lex_first());
    return trace_round_trip(honest, "generated.saf");
  });
  Outcome o;
  o.pass = tally.failures() == 0;
  o.detail = std::to_string(names.size()) + " fixtures and 100 generated frameworks with their traces; " +
             std::to_string(tally.failures()) + " mismatches" + tally.summary();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {1, "semantics match brute-force enumeration", semantics_oracle},
      {2, "saf8: honest loss, legacy collusion, blocked under min_o", example_one},
      {3, "saf16: values after {E}, {D1}, {D1,D2}", example_three},
      {4, "ah: minimality-compliant collusion flips the outcome", ah_collusion},
      {5, "non-minimal moves are dominated by minimal subsets", dominance},
      {6, "legacy and min_both game values agree", winner_invariance},
      {7, "aim collapse under grounded and stable", aim_collapse},
      {8, "acyclic frameworks have one complete extension", well_founded},
      {9, "auditor accepts honest play and flags mutations", auditor},
      {10, "framework and trace formats round-trip", round_trip},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " — " << o.detail
              << " [" << timing << "]\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " ("
            << omp_get_max_threads() << " threads)\n";
  return failed == 0 ? 0 : 1;
}
