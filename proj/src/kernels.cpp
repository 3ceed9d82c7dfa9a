#include "stratarg/kernels.hpp"

#include <algorithm>
#include <bit>

namespace stratarg::kernels {

std::vector<std::uint64_t> minimal_masks_serial(const EffectTable& table) {
  const std::uint64_t n = table.subset_count();
  // below[m]: some nonempty proper subset of m is effective.
  std::vector<std::uint8_t> below(n, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < n; ++m) {
    std::uint8_t b = 0;
    for (std::uint64_t rest = m; rest != 0 && !b; rest &= rest - 1) {
      std::uint64_t sub = m & ~(rest & (~rest + 1));
      if (sub != 0 && (table.effective[sub] || below[sub])) b = 1;
    }
    below[m] = b;
    if (table.effective[m] && !b) out.push_back(m);
  }
  return out;
}

std::vector<std::uint64_t> minimal_masks_parallel(const EffectTable& table) {
  const std::size_t k = table.pool.size();
  const std::uint64_t n = table.subset_count();
  std::vector<std::uint8_t> below(n, 0);
  // Subsets are processed layer by layer (by popcount) so every dependency is
  // finished before its supersets start.
  std::vector<std::vector<std::uint64_t>> layers(k + 1);
  for (std::uint64_t m = 1; m < n; ++m) layers[std::popcount(m)].push_back(m);
  std::vector<std::uint8_t> minimal(n, 0);
  for (std::size_t size = 1; size <= k; ++size) {
    const auto& layer = layers[size];
    const std::int64_t count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < count; ++j) {
      std::uint64_t m = layer[static_cast<std::size_t>(j)];
      std::uint8_t b = 0;
      for (std::uint64_t rest = m; rest != 0 && !b; rest &= rest - 1) {
        std::uint64_t sub = m & ~(rest & (~rest + 1));
        if (sub != 0 && (table.effective[sub] || below[sub])) b = 1;
      }
      below[m] = b;
      minimal[m] = table.effective[m] && !b;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < n; ++m) {
    if (minimal[m]) out.push_back(m);
  }
  return out;
}

}  // namespace stratarg::kernels
