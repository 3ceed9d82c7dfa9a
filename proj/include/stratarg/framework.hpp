#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratarg/arg_set.hpp"
#include "stratarg/error.hpp"

namespace stratarg {

using ArgumentId = std::string;

struct Attack {
  ArgumentId attacker;
  ArgumentId target;
};

bool is_valid_argument_id(std::string_view id);

/// A finite set of arguments with an attack relation. Arguments are stored in
/// sorted id order; `ArgIndex` values refer to that order.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;
  /// Duplicate attacks collapse; duplicate argument ids, malformed ids and
  /// dangling attack endpoints are rejected.
  ArgumentationFramework(std::vector<ArgumentId> arguments, const std::vector<Attack>& attacks);

  std::size_t size() const { return ids_.size(); }
  ArgSet all() const { return ArgSet::prefix(ids_.size()); }

  const std::vector<ArgumentId>& ids() const { return ids_; }
  const ArgumentId& id(ArgIndex i) const { return ids_.at(i); }

  bool has(std::string_view id) const;
  /// Throws `unknown_argument` when absent.
  ArgIndex index_of(std::string_view id) const;
  ArgSet set_of(std::span<const ArgumentId> ids) const;
  ArgSet set_of(std::initializer_list<std::string_view> ids) const;
  std::vector<ArgumentId> ids_of(ArgSet s) const;

  /// Arguments attacked by `i`.
  ArgSet targets(ArgIndex i) const { return targets_[i]; }
  /// Arguments attacking `i`.
  ArgSet attackers(ArgIndex i) const { return attackers_[i]; }
  bool attacks(ArgIndex a, ArgIndex b) const { return targets_[a].contains(b); }
  /// Everything attacked by some member of `s`.
  ArgSet attacked_by(ArgSet s) const;

  /// Attack pairs in canonical (attacker, target) order.
  std::vector<std::pair<ArgIndex, ArgIndex>> attack_pairs() const;
  std::size_t attack_count() const;

  /// Throws `unknown_argument` when `s` names indices outside the framework.
  void require_subset(ArgSet s) const;

 private:
  std::vector<ArgumentId> ids_;
  std::vector<ArgSet> targets_;
  std::vector<ArgSet> attackers_;
};

}  // namespace stratarg
