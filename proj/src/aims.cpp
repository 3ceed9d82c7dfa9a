#include "stratarg/aims.hpp"

#include <array>
#include <string>

namespace stratarg {

namespace {

constexpr std::array<std::string_view, 2> semantics_names{"grounded", "stable"};
constexpr std::array<std::string_view, 7> aim_names{
    "existential", "universal", "unrejected", "uncontested", "plurality", "majority", "supermajority"};

}  // namespace

std::string_view to_string(Semantics s) { return semantics_names[static_cast<std::size_t>(s)]; }
std::string_view to_string(Aim a) { return aim_names[static_cast<std::size_t>(a)]; }
std::string_view to_string(Side s) { return s == Side::proponent ? "P" : "O"; }

std::optional<Semantics> parse_semantics(std::string_view text) {
  for (std::size_t i = 0; i < semantics_names.size(); ++i) {
    if (semantics_names[i] == text) return static_cast<Semantics>(i);
  }
  return std::nullopt;
}

std::optional<Aim> parse_aim(std::string_view text) {
  for (std::size_t i = 0; i < aim_names.size(); ++i) {
    if (aim_names[i] == text) return static_cast<Aim>(i);
  }
  return std::nullopt;
}

std::optional<Side> parse_side(std::string_view text) {
  if (text == "p" || text == "P" || text == "proponent") return Side::proponent;
  if (text == "o" || text == "O" || text == "opponent") return Side::opponent;
  return std::nullopt;
}

AimCounts aim_counts(const ArgumentationFramework& af, ArgSet universe, Semantics sem,
                     ArgIndex focal, std::size_t bound) {
  if (focal >= af.size() || !universe.contains(focal)) {
    throw Error(ErrorKind::unknown_argument, "focal argument is not in the framework");
  }
  auto classify = [&](Extension e, AimCounts& c) {
    if (e.contains(focal)) {
      ++c.n_accepted;
    } else if (af.attackers(focal).intersects(e)) {
      ++c.n_rejected;
    } else {
      ++c.n_undecided_status;
    }
    ++c.n_total;
  };
  AimCounts counts;
  if (sem == Semantics::grounded) {
    classify(grounded_extension(af, universe), counts);
  } else {
    for (Extension e : stable_extensions(af, universe, bound)) classify(e, counts);
  }
  return counts;
}

AimCounts aim_counts(const ArgumentationFramework& af, Semantics sem, std::string_view focal,
                     std::size_t bound) {
  return aim_counts(af, af.all(), sem, af.index_of(focal), bound);
}

bool proponent_aim_holds(const AimCounts& c, Aim aim, bool strict_empty) {
  if (strict_empty && c.n_total == 0) return false;
  const std::size_t not_accepted = c.n_total - c.n_accepted;
  switch (aim) {
    case Aim::existential: return c.n_accepted >= 1;
    case Aim::universal: return c.n_accepted == c.n_total;
    case Aim::unrejected: return c.n_rejected == 0;
    case Aim::uncontested: return c.n_accepted >= 1 && c.n_rejected == 0;
    case Aim::plurality: return c.n_accepted > c.n_rejected;
    case Aim::majority: return c.n_accepted > not_accepted;
    case Aim::supermajority: return c.n_accepted >= 2 * not_accepted;
  }
  return false;
}

bool verify_aim(const ArgumentationFramework& af, ArgSet universe, Semantics sem, Aim aim,
                ArgIndex focal, Side side, const AimOptions& options) {
  bool holds = proponent_aim_holds(aim_counts(af, universe, sem, focal, options.enumeration_bound),
                                   aim, options.strict_empty);
  return side == Side::proponent ? holds : !holds;
}

bool verify_aim(const ArgumentationFramework& af, Semantics sem, Aim aim, std::string_view focal,
                Side side, const AimOptions& options) {
  return verify_aim(af, af.all(), sem, aim, af.index_of(focal), side, options);
}

}  // namespace stratarg
