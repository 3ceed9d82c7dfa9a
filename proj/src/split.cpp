#include "stratarg/split.hpp"

namespace stratarg {

SplitFramework::SplitFramework(ArgumentationFramework af, ArgSet common, ArgSet proponent,
                               ArgSet opponent, ArgIndex focal, Semantics sem, Aim aim,
                               AimOptions options)
    : af_(std::move(af)),
      common_(common),
      proponent_(proponent),
      opponent_(opponent),
      focal_(focal),
      semantics_(sem),
      aim_(aim),
      options_(options) {
  if (common.intersects(proponent) || common.intersects(opponent) || proponent.intersects(opponent)) {
    throw Error(ErrorKind::invalid_framework, "argument pools overlap");
  }
  if ((common | proponent | opponent) != af_.all()) {
    throw Error(ErrorKind::invalid_framework, "argument pools do not cover the framework");
  }
  if (focal >= af_.size() || !(common | proponent).contains(focal)) {
    throw Error(ErrorKind::invalid_framework, "focal argument must be common or the proponent's");
  }
}

SplitFramework SplitFramework::from_ids(const std::vector<ArgumentId>& common,
                                        const std::vector<ArgumentId>& proponent,
                                        const std::vector<ArgumentId>& opponent,
                                        const std::vector<Attack>& attacks,
                                        const ArgumentId& focal, Semantics sem, Aim aim) {
  std::vector<ArgumentId> all = common;
  all.insert(all.end(), proponent.begin(), proponent.end());
  all.insert(all.end(), opponent.begin(), opponent.end());
  ArgumentationFramework af(std::move(all), attacks);
  ArgSet c = af.set_of(common);
  ArgSet p = af.set_of(proponent);
  ArgSet o = af.set_of(opponent);
  ArgIndex f = af.index_of(focal);
  return SplitFramework(std::move(af), c, p, o, f, sem, aim);
}

SplitFramework SplitFramework::with_rules(Semantics sem, Aim aim, AimOptions options) const {
  SplitFramework copy = *this;
  copy.semantics_ = sem;
  copy.aim_ = aim;
  copy.options_ = options;
  return copy;
}

bool SplitFramework::aim_holds(ArgSet revealed, Side side) const {
  bool proponent_holds = false;
  if (revealed.contains(focal_)) {
    proponent_holds = verify_aim(af_, revealed, semantics_, aim_, focal_, Side::proponent, options_);
  }
  return side == Side::proponent ? proponent_holds : !proponent_holds;
}

bool operator==(const SplitFramework& a, const SplitFramework& b) {
  return a.af_.ids() == b.af_.ids() && a.af_.attack_pairs() == b.af_.attack_pairs() &&
         a.common_ == b.common_ && a.proponent_ == b.proponent_ && a.opponent_ == b.opponent_ &&
         a.focal_ == b.focal_ && a.semantics_ == b.semantics_ && a.aim_ == b.aim_ &&
         a.options_ == b.options_;
}

}  // namespace stratarg
