#include "stratarg/audit.hpp"

#include <sstream>

namespace stratarg {

namespace {

std::string brace(const ArgumentationFramework& af, ArgSet s) {
  std::string out = "{";
  bool first = true;
  for (ArgIndex i : s) {
    if (!first) out += ",";
    out += af.id(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::wrong_turn: return "wrong_turn";
    case ViolationKind::empty_move: return "empty_move";
    case ViolationKind::unowned_argument: return "unowned_argument";
    case ViolationKind::already_revealed: return "already_revealed";
    case ViolationKind::ineffective: return "ineffective";
    case ViolationKind::non_minimal: return "non_minimal";
    case ViolationKind::premature_surrender: return "premature_surrender";
    case ViolationKind::winner_mismatch: return "winner_mismatch";
  }
  return "unknown";
}

bool AuditReport::has_violation(ViolationKind kind) const {
  for (const auto& v : violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

bool AuditReport::has_violation(ViolationKind kind, std::size_t index) const {
  for (const auto& v : violations) {
    if (v.kind == kind && v.index == index) return true;
  }
  return false;
}

std::vector<SelfInjury> self_injury_report(const GameTrace& trace, InjuryScope scope) {
  const SplitFramework& split = *trace.split;
  const ArgumentationFramework& af = split.framework();
  std::vector<SelfInjury> out;
  ArgSet revealed = split.common();
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& move = trace.moves[i];
    ArgSet args = move.args & af.all();
    revealed |= args;
    ArgSet own = split.pool(move.player);
    if (scope == InjuryScope::revealed_only) own &= revealed;
    SelfInjury injury{i + 1, move.player, {}};
    for (ArgIndex a : args) {
      for (ArgIndex b : af.targets(a) & own) injury.attacked_own.emplace_back(a, b);
    }
    if (!injury.attacked_own.empty()) out.push_back(std::move(injury));
  }
  return out;
}

AuditReport audit_trace(const GameTrace& trace, Standard standard, InjuryScope scope) {
  const SplitFramework& split = *trace.split;
  const ArgumentationFramework& af = split.framework();
  AuditReport report;
  report.standard = standard;
  report.claimed_winner = trace.winner;
  report.advisories = self_injury_report(trace, scope);

  GameState state = GameState::initial(trace.split);
  bool aborted = false;
  for (std::size_t i = 0; i < trace.moves.size() && !aborted; ++i) {
    const Move& move = trace.moves[i];
    const std::size_t index = i + 1;
    MoveRecord record;
    record.index = index;
    record.player = move.player;
    record.args = move.args;

    auto structural = [&](ViolationKind kind, std::string detail) {
      report.violations.push_back({kind, index, std::move(detail)});
      report.per_move.push_back(record);
      aborted = true;
    };
    if (move.player != state.turn()) {
      structural(ViolationKind::wrong_turn,
                 std::string("expected a move by ") + std::string(to_string(state.turn())));
      break;
    }
    if (move.args.empty()) {
      structural(ViolationKind::empty_move, "move reveals nothing");
      break;
    }
    if (!move.args.subset_of(af.all())) {
      structural(ViolationKind::unowned_argument, "move names unknown arguments");
      break;
    }
    if (ArgSet foreign = move.args - split.pool(move.player); !foreign.empty()) {
      structural(ViolationKind::unowned_argument,
                 brace(af, foreign) + " not in " + std::string(to_string(move.player)) + "'s pool");
      break;
    }
    if (ArgSet again = move.args & state.revealed(); !again.empty()) {
      structural(ViolationKind::already_revealed, brace(af, again) + " already revealed");
      break;
    }

    try {
      record.min_effective_size = min_effective_size(state);
    } catch (const Error&) {
      record.min_effective_size.reset();
    }
    record.effective = split.aim_holds(state.revealed() | move.args, move.player);
    if (!record.effective) {
      report.violations.push_back(
          {ViolationKind::ineffective, index, "aim of " + std::string(to_string(move.player)) +
                                                  " does not hold after the move"});
    }
    if (requires_minimal(standard, move.player)) {
      if (record.effective) {
        record.witness = minimality_witness(state, move);
        record.minimal = !record.witness.has_value();
        if (record.witness) {
          report.violations.push_back(
              {ViolationKind::non_minimal, index, "subset " + brace(af, *record.witness) +
                                                      " is already effective"});
        }
      } else {
        record.minimal = false;
      }
    }
    report.per_move.push_back(record);
    state = state.with(state.revealed() | move.args, other(state.turn()));
  }

  if (!aborted) {
    report.end_check.evaluated = true;
    const Side to_move = state.turn();
    const bool can_move = has_effective_move(state);
    report.end_check.loser_had_no_move = !can_move && to_move == other(trace.winner);
    if (can_move) {
      report.violations.push_back({ViolationKind::premature_surrender, 0,
                                   std::string(to_string(to_move)) +
                                       " still had an effective move"});
    }
    if (to_move == trace.winner) {
      report.violations.push_back({ViolationKind::winner_mismatch, 0,
                                   "claimed winner " + std::string(to_string(trace.winner)) +
                                       " is the player left to move"});
    }
  }
  return report;
}

std::string render_text(const AuditReport& report, const SplitFramework& split,
                        bool with_advisories) {
  const ArgumentationFramework& af = split.framework();
  std::ostringstream out;
  out << "standard " << to_string(report.standard) << "\n";
  for (const MoveRecord& r : report.per_move) {
    out << "move " << r.index << " " << to_string(r.player) << " " << brace(af, r.args & af.all())
        << " effective=" << (r.effective ? "yes" : "no") << " minimal=";
    if (r.minimal) {
      out << (*r.minimal ? "yes" : "no");
    } else {
      out << "not-required";
    }
    if (r.witness) out << " witness=" << brace(af, *r.witness);
    if (r.min_effective_size) {
      out << " size=" << r.args.size() << "/min " << *r.min_effective_size;
    }
    out << "\n";
  }
  if (report.end_check.evaluated) {
    out << "end loser_had_no_move=" << (report.end_check.loser_had_no_move ? "yes" : "no") << "\n";
  } else {
    out << "end not-evaluated\n";
  }
  for (const Violation& v : report.violations) {
    out << "violation " << to_string(v.kind);
    if (v.index != 0) out << " at move " << v.index;
    out << ": " << v.detail << "\n";
  }
  if (with_advisories) {
    for (const SelfInjury& s : report.advisories) {
      out << "advisory self_injury at move " << s.index << ":";
      for (auto [a, b] : s.attacked_own) out << " " << af.id(a) << "->" << af.id(b);
      out << "\n";
    }
  }
  out << "verdict " << (report.compliant() ? "compliant" : "violation") << "\n";
  return out.str();
}

}  // namespace stratarg
