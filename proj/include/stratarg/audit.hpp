#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratarg/search.hpp"

namespace stratarg {

enum class ViolationKind {
  wrong_turn,
  empty_move,
  unowned_argument,
  already_revealed,
  ineffective,
  non_minimal,
  premature_surrender,
  winner_mismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// 1-based move index; 0 for end-of-game findings.
  std::size_t index = 0;
  std::string detail;
};

struct MoveRecord {
  std::size_t index = 0;
  Side player = Side::proponent;
  ArgSet args;
  bool effective = false;
  /// Empty when the standard does not require minimality of this player.
  std::optional<bool> minimal;
  /// Effective nonempty proper subset proving non-minimality.
  std::optional<ArgSet> witness;
  /// Smallest effective move size at this point; informational only.
  std::optional<std::size_t> min_effective_size;
};

struct EndCheck {
  /// False when replay stopped at a structural violation.
  bool evaluated = false;
  bool loser_had_no_move = false;
};

enum class InjuryScope { full_pool, revealed_only };

struct SelfInjury {
  std::size_t index = 0;
  Side player = Side::proponent;
  std::vector<std::pair<ArgIndex, ArgIndex>> attacked_own;
};

struct AuditReport {
  Standard standard = Standard::legacy;
  Side claimed_winner = Side::proponent;
  std::vector<MoveRecord> per_move;
  EndCheck end_check;
  std::vector<SelfInjury> advisories;
  std::vector<Violation> violations;

  bool compliant() const { return violations.empty(); }
  bool has_violation(ViolationKind kind) const;
  bool has_violation(ViolationKind kind, std::size_t index) const;
};

/// Attacks from each move onto the mover's own arguments.
std::vector<SelfInjury> self_injury_report(const GameTrace& trace,
                                           InjuryScope scope = InjuryScope::full_pool);

/// Replays `trace`, checking effectiveness of every move, minimality of the
/// moves `standard` constrains, and that the trace ends with the claimed
/// loser to move and out of effective moves. Problems are reported, never
/// thrown; advisories do not affect the verdict.
AuditReport audit_trace(const GameTrace& trace, Standard standard,
                        InjuryScope scope = InjuryScope::full_pool);

std::string render_text(const AuditReport& report, const SplitFramework& split,
                        bool with_advisories = true);

}  // namespace stratarg
