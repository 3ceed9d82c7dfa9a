#include "stratarg/framework.hpp"

#include <algorithm>

namespace stratarg {

bool is_valid_argument_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

ArgumentationFramework::ArgumentationFramework(std::vector<ArgumentId> arguments,
                                               const std::vector<Attack>& attacks)
    : ids_(std::move(arguments)) {
  for (const auto& id : ids_) {
    if (!is_valid_argument_id(id)) {
      throw Error(ErrorKind::invalid_framework, "malformed argument id '" + id + "'");
    }
  }
  std::sort(ids_.begin(), ids_.end());
  if (auto dup = std::adjacent_find(ids_.begin(), ids_.end()); dup != ids_.end()) {
    throw Error(ErrorKind::invalid_framework, "duplicate argument '" + *dup + "'");
  }
  if (ids_.size() > max_arguments) {
    throw Error(ErrorKind::size_bound_exceeded,
                "framework has " + std::to_string(ids_.size()) + " arguments; at most " +
                    std::to_string(max_arguments) + " are supported");
  }
  targets_.assign(ids_.size(), ArgSet{});
  attackers_.assign(ids_.size(), ArgSet{});
  for (const auto& att : attacks) {
    ArgIndex a = index_of(att.attacker);
    ArgIndex b = index_of(att.target);
    targets_[a].insert(b);
    attackers_[b].insert(a);
  }
}

bool ArgumentationFramework::has(std::string_view id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

ArgIndex ArgumentationFramework::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) {
    throw Error(ErrorKind::unknown_argument, "unknown argument '" + std::string(id) + "'");
  }
  return static_cast<ArgIndex>(it - ids_.begin());
}

ArgSet ArgumentationFramework::set_of(std::span<const ArgumentId> ids) const {
  ArgSet s;
  for (const auto& id : ids) s.insert(index_of(id));
  return s;
}

ArgSet ArgumentationFramework::set_of(std::initializer_list<std::string_view> ids) const {
  ArgSet s;
  for (auto id : ids) s.insert(index_of(id));
  return s;
}

std::vector<ArgumentId> ArgumentationFramework::ids_of(ArgSet s) const {
  require_subset(s);
  std::vector<ArgumentId> out;
  out.reserve(s.size());
  for (ArgIndex i : s) out.push_back(ids_[i]);
  return out;
}

ArgSet ArgumentationFramework::attacked_by(ArgSet s) const {
  ArgSet out;
  for (ArgIndex i : s) out |= targets_[i];
  return out;
}

std::vector<std::pair<ArgIndex, ArgIndex>> ArgumentationFramework::attack_pairs() const {
  std::vector<std::pair<ArgIndex, ArgIndex>> out;
  for (ArgIndex a = 0; a < ids_.size(); ++a) {
    for (ArgIndex b : targets_[a]) out.emplace_back(a, b);
  }
  return out;
}

std::size_t ArgumentationFramework::attack_count() const {
  std::size_t n = 0;
  for (auto t : targets_) n += t.size();
  return n;
}

void ArgumentationFramework::require_subset(ArgSet s) const {
  if (!s.subset_of(all())) {
    throw Error(ErrorKind::unknown_argument, "argument set names indices outside the framework");
  }
}

}  // namespace stratarg
