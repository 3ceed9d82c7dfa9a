#include "stratarg/corpus.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "stratarg/random.hpp"

namespace stratarg {

SplitFramework random_split(const GeneratorParams& params) {
  const double p = params.attack_probability;
  if (std::isnan(p) || p < 0.0 || p > 1.0) {
    throw Error(ErrorKind::invalid_params, "attack probability must lie in [0,1]");
  }
  if (params.require_focal_playable && params.n_p == 0) {
    throw Error(ErrorKind::invalid_params, "a playable focal argument needs a proponent pool");
  }
  if (params.n_p == 0 && params.n_common == 0) {
    throw Error(ErrorKind::invalid_params, "no argument can serve as focal");
  }
  const std::size_t n = params.n_common + params.n_p + params.n_o;
  if (n > max_arguments) {
    throw Error(ErrorKind::invalid_params, "too many arguments requested");
  }

  std::vector<ArgumentId> names;
  auto add = [&names](char prefix, std::size_t count) {
    for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  };
  add('c', params.n_common);
  add('p', params.n_p);
  add('o', params.n_o);

  std::mt19937_64 rng(params.seed);
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  if (params.acyclic_only) {
    for (std::size_t i = n; i > 1; --i) std::swap(rank[i - 1], rank[uniform_below(rng, i)]);
  }

  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && (!params.self_attacks || params.acyclic_only)) continue;
      if (params.acyclic_only && rank[i] >= rank[j]) continue;
      if (bernoulli(rng, p)) attacks.push_back({names[i], names[j]});
    }
  }

  std::vector<ArgumentId> common(names.begin(), names.begin() + params.n_common);
  std::vector<ArgumentId> proponent(names.begin() + params.n_common,
                                    names.begin() + params.n_common + params.n_p);
  std::vector<ArgumentId> opponent(names.begin() + params.n_common + params.n_p, names.end());
  const ArgumentId focal = params.n_p > 0 ? proponent.front() : common.front();
  return SplitFramework::from_ids(common, proponent, opponent, attacks, focal, params.semantics,
                                  params.aim);
}

ArgumentationFramework random_framework(std::size_t n, double attack_probability,
                                        std::uint64_t seed, bool acyclic_only) {
  GeneratorParams params;
  params.n_common = n;
  params.n_p = 0;
  params.n_o = 0;
  params.attack_probability = attack_probability;
  params.seed = seed;
  params.require_focal_playable = false;
  params.acyclic_only = acyclic_only;
  return random_split(params).framework();
}

}  // namespace stratarg
