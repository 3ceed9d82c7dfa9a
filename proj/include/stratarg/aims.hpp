#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "stratarg/semantics.hpp"

namespace stratarg {

enum class Semantics { grounded, stable };

enum class Aim { existential, universal, unrejected, uncontested, plurality, majority, supermajority };

enum class Side { proponent, opponent };

inline constexpr Side other(Side s) {
  return s == Side::proponent ? Side::opponent : Side::proponent;
}

std::string_view to_string(Semantics s);
std::string_view to_string(Aim a);
/// "P" or "O".
std::string_view to_string(Side s);

std::optional<Semantics> parse_semantics(std::string_view text);
std::optional<Aim> parse_aim(std::string_view text);
/// Accepts p/o, P/O, proponent/opponent.
std::optional<Side> parse_side(std::string_view text);

/// How the focal argument fares across the extensions of a semantics.
struct AimCounts {
  std::size_t n_accepted = 0;
  std::size_t n_rejected = 0;
  std::size_t n_undecided_status = 0;
  std::size_t n_total = 0;

  friend bool operator==(const AimCounts&, const AimCounts&) = default;
};

struct AimOptions {
  /// When set, every proponent aim fails if the semantics has no extension.
  bool strict_empty = false;
  std::size_t enumeration_bound = default_enumeration_bound;

  friend bool operator==(const AimOptions&, const AimOptions&) = default;
};

AimCounts aim_counts(const ArgumentationFramework& af, ArgSet universe, Semantics sem,
                     ArgIndex focal, std::size_t bound = default_enumeration_bound);
AimCounts aim_counts(const ArgumentationFramework& af, Semantics sem, std::string_view focal,
                     std::size_t bound = default_enumeration_bound);

/// The proponent's reading of `aim` over precomputed counts.
bool proponent_aim_holds(const AimCounts& counts, Aim aim, bool strict_empty = false);

bool verify_aim(const ArgumentationFramework& af, ArgSet universe, Semantics sem, Aim aim,
                ArgIndex focal, Side side, const AimOptions& options = {});
bool verify_aim(const ArgumentationFramework& af, Semantics sem, Aim aim, std::string_view focal,
                Side side, const AimOptions& options = {});

}  // namespace stratarg
