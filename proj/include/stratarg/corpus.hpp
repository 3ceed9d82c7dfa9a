#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "stratarg/split.hpp"

namespace stratarg {

/// Names accepted by `fixture`.
const std::vector<std::string>& fixture_names();

/// The worked examples: saf8, safmulti, saf16, ah, choice. Throws
/// `unknown_fixture` for anything else.
SplitFramework fixture(std::string_view name);

struct GeneratorParams {
  std::size_t n_common = 0;
  std::size_t n_p = 1;
  std::size_t n_o = 1;
  double attack_probability = 0.3;
  std::uint64_t seed = 0;
  bool require_focal_playable = true;
  bool acyclic_only = false;
  bool self_attacks = false;
  Semantics semantics = Semantics::grounded;
  Aim aim = Aim::existential;
};

/// Seeded random split framework. Arguments are c1.., p1.., o1..; every
/// ordered pair is attacked independently with the given probability. With
/// `acyclic_only` attacks follow a random topological order instead. The
/// focal argument is p1, or c1 when there is no proponent pool.
SplitFramework random_split(const GeneratorParams& params);

/// Plain framework of `n` arguments (c1..cn) drawn the same way.
ArgumentationFramework random_framework(std::size_t n, double attack_probability,
                                        std::uint64_t seed, bool acyclic_only = false);

/// `fixture:<name>` or a path to a .saf file.
SplitFramework load_split(std::string_view ref);

}  // namespace stratarg
