#include "stratarg/policy.hpp"

#include <charconv>

namespace stratarg {

std::optional<MovePolicy> parse_policy(std::string_view text) {
  if (text == "lex" || text == "lex_first") return MovePolicy::lex_first();
  if (text == "optimal") return MovePolicy::optimal();
  constexpr std::string_view prefix = "random:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    std::uint64_t seed = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc{} && end == digits.data() + digits.size() && !digits.empty()) {
      return MovePolicy::seeded_random(seed);
    }
  }
  return std::nullopt;
}

std::string to_string(const MovePolicy& policy) {
  switch (policy.kind) {
    case MovePolicy::Kind::lex_first: return "lex";
    case MovePolicy::Kind::seeded_random: return "random:" + std::to_string(policy.seed);
    case MovePolicy::Kind::optimal: return "optimal";
  }
  return "lex";
}

}  // namespace stratarg
