#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace stratarg {

/// How an honest player picks among minimal effective moves.
struct MovePolicy {
  enum class Kind { lex_first, seeded_random, optimal };

  Kind kind = Kind::lex_first;
  std::uint64_t seed = 0;

  static MovePolicy lex_first() { return {Kind::lex_first, 0}; }
  static MovePolicy seeded_random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
  static MovePolicy optimal() { return {Kind::optimal, 0}; }

  friend bool operator==(const MovePolicy&, const MovePolicy&) = default;
};

/// "lex", "random:<seed>" or "optimal".
std::optional<MovePolicy> parse_policy(std::string_view text);
std::string to_string(const MovePolicy& policy);

}  // namespace stratarg
