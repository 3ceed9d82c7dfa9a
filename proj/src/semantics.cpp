#include "stratarg/semantics.hpp"

#include <algorithm>
#include <string>

namespace stratarg {

namespace {

class StableEnumerator {
 public:
  StableEnumerator(const ArgumentationFramework& af, ArgSet universe, std::vector<Extension>& out)
      : af_(af), universe_(universe), out_(out) {}

  void run(ArgSet in, ArgSet excluded) {
    ArgSet attacked = af_.attacked_by(in) & universe_;
    // An excluded argument needs some attacker that can still enter.
    for (ArgIndex x : excluded - attacked) {
      if (((af_.attackers(x) & universe_) - excluded).empty()) return;
    }
    ArgSet open = universe_ - in - excluded;
    if (open.empty()) {
      if ((universe_ - in).subset_of(attacked)) out_.push_back(in);
      return;
    }
    ArgIndex i = *open.begin();
    ArgSet one = ArgSet::single(i);
    if (!af_.attacks(i, i)) {
      ArgSet neighbours = (af_.targets(i) | af_.attackers(i)) & universe_;
      if (!neighbours.intersects(in)) run(in | one, excluded | (neighbours - one));
    }
    run(in, excluded | one);
  }

 private:
  const ArgumentationFramework& af_;
  ArgSet universe_;
  std::vector<Extension>& out_;
};

}  // namespace

bool is_conflict_free(const ArgumentationFramework& af, ArgSet s) {
  af.require_subset(s);
  return !af.attacked_by(s).intersects(s);
}

ArgSet defended_by(const ArgumentationFramework& af, ArgSet universe, ArgSet s) {
  ArgSet attacked = af.attacked_by(s) & universe;
  ArgSet out;
  for (ArgIndex a : universe) {
    if ((af.attackers(a) & universe).subset_of(attacked)) out.insert(a);
  }
  return out;
}

bool is_complete_extension(const ArgumentationFramework& af, ArgSet s) {
  return is_conflict_free(af, s) && defended_by(af, af.all(), s) == s;
}

bool is_stable_extension(const ArgumentationFramework& af, ArgSet s) {
  return is_conflict_free(af, s) && (af.all() - s).subset_of(af.attacked_by(s));
}

Labeling labeling_of(const ArgumentationFramework& af, ArgSet universe, Extension e) {
  af.require_subset(universe);
  Labeling l;
  l.accepted = e & universe;
  l.rejected = af.attacked_by(l.accepted) & universe;
  l.undecided = universe - l.accepted - l.rejected;
  return l;
}

Labeling labeling_of(const ArgumentationFramework& af, Extension e) {
  af.require_subset(e);
  return labeling_of(af, af.all(), e);
}

Extension grounded_extension(const ArgumentationFramework& af, ArgSet universe) {
  af.require_subset(universe);
  ArgSet current;
  while (true) {
    ArgSet next = defended_by(af, universe, current);
    if (next == current) return current;
    current = next;
  }
}

Labeling grounded_labeling(const ArgumentationFramework& af, ArgSet universe) {
  return labeling_of(af, universe, grounded_extension(af, universe));
}

Labeling grounded_labeling(const ArgumentationFramework& af) {
  return grounded_labeling(af, af.all());
}

std::vector<Extension> stable_extensions(const ArgumentationFramework& af, ArgSet universe,
                                         std::size_t bound) {
  af.require_subset(universe);
  if (universe.size() > bound) {
    throw Error(ErrorKind::size_bound_exceeded,
                "stable enumeration over " + std::to_string(universe.size()) +
                    " arguments exceeds the bound of " + std::to_string(bound));
  }
  std::vector<Extension> out;
  StableEnumerator(af, universe, out).run(ArgSet{}, ArgSet{});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Extension> stable_extensions(const ArgumentationFramework& af, std::size_t bound) {
  return stable_extensions(af, af.all(), bound);
}

bool is_well_founded(const ArgumentationFramework& af) {
  // Peel off arguments with no remaining attackers; a cycle never peels.
  ArgSet remaining = af.all();
  bool progress = true;
  while (!remaining.empty() && progress) {
    progress = false;
    for (ArgIndex a : remaining) {
      if (!af.attackers(a).intersects(remaining)) {
        remaining.erase(a);
        progress = true;
      }
    }
  }
  return remaining.empty();
}

}  // namespace stratarg
