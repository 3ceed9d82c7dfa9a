#pragma once

#include <cstddef>
#include <vector>

#include "stratarg/framework.hpp"

namespace stratarg {

using Extension = ArgSet;

struct Labeling {
  ArgSet accepted;
  ArgSet rejected;
  ArgSet undecided;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

inline constexpr std::size_t default_enumeration_bound = 20;

// Every function below has a form restricted to a sub-framework: `universe`
// selects the arguments that exist, and attacks touching anything outside it
// are ignored. The unrestricted forms use the whole framework.

bool is_conflict_free(const ArgumentationFramework& af, ArgSet s);
bool is_complete_extension(const ArgumentationFramework& af, ArgSet s);
bool is_stable_extension(const ArgumentationFramework& af, ArgSet s);

/// Arguments of `universe` all of whose attackers inside `universe` are
/// attacked by `s`.
ArgSet defended_by(const ArgumentationFramework& af, ArgSet universe, ArgSet s);

Labeling labeling_of(const ArgumentationFramework& af, ArgSet universe, Extension e);
Labeling labeling_of(const ArgumentationFramework& af, Extension e);

Extension grounded_extension(const ArgumentationFramework& af, ArgSet universe);
Labeling grounded_labeling(const ArgumentationFramework& af, ArgSet universe);
Labeling grounded_labeling(const ArgumentationFramework& af);

/// All stable extensions of the sub-framework in canonical order. Throws
/// `size_bound_exceeded` when the universe is larger than `bound`.
std::vector<Extension> stable_extensions(const ArgumentationFramework& af, ArgSet universe,
                                         std::size_t bound = default_enumeration_bound);
std::vector<Extension> stable_extensions(const ArgumentationFramework& af,
                                         std::size_t bound = default_enumeration_bound);

/// No attack cycles (self-attacks included).
bool is_well_founded(const ArgumentationFramework& af);

}  // namespace stratarg
