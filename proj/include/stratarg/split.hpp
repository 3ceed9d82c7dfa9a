#pragma once

#include <vector>

#include "stratarg/aims.hpp"
#include "stratarg/framework.hpp"

namespace stratarg {

/// Common pool, the two private pools and one attack relation over their
/// union, together with the focal argument and the rules of play.
class SplitFramework {
 public:
  SplitFramework(ArgumentationFramework af, ArgSet common, ArgSet proponent, ArgSet opponent,
                 ArgIndex focal, Semantics sem = Semantics::grounded,
                 Aim aim = Aim::existential, AimOptions options = {});

  static SplitFramework from_ids(const std::vector<ArgumentId>& common,
                                 const std::vector<ArgumentId>& proponent,
                                 const std::vector<ArgumentId>& opponent,
                                 const std::vector<Attack>& attacks, const ArgumentId& focal,
                                 Semantics sem = Semantics::grounded,
                                 Aim aim = Aim::existential);

  const ArgumentationFramework& framework() const { return af_; }
  ArgSet common() const { return common_; }
  ArgSet pool(Side side) const { return side == Side::proponent ? proponent_ : opponent_; }
  ArgSet all() const { return af_.all(); }
  ArgIndex focal() const { return focal_; }
  Semantics semantics() const { return semantics_; }
  Aim aim() const { return aim_; }
  const AimOptions& options() const { return options_; }

  /// Same arguments and attacks under different rules.
  SplitFramework with_rules(Semantics sem, Aim aim, AimOptions options) const;
  SplitFramework with_rules(Semantics sem, Aim aim) const { return with_rules(sem, aim, options_); }

  /// Whether `side`'s aim holds in the framework visible once `revealed` is
  /// common knowledge. The proponent's aim never holds while the focal
  /// argument is unrevealed, so the opponent's aim holds there.
  bool aim_holds(ArgSet revealed, Side side) const;

  /// The proponent's aim already holds before any move.
  bool is_degenerate() const { return aim_holds(common_, Side::proponent); }

  friend bool operator==(const SplitFramework& a, const SplitFramework& b);

 private:
  ArgumentationFramework af_;
  ArgSet common_;
  ArgSet proponent_;
  ArgSet opponent_;
  ArgIndex focal_ = 0;
  Semantics semantics_ = Semantics::grounded;
  Aim aim_ = Aim::existential;
  AimOptions options_;
};

}  // namespace stratarg
