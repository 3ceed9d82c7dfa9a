#pragma once

// Subset-scanning kernels. Each kernel has a serial reference and an OpenMP
// variant that must produce identical tables; tests compare the two.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include "stratarg/arg_set.hpp"

namespace stratarg {

enum class Execution { serial, parallel };

/// Effectiveness of every subset of a pool of candidate arguments. Entry `m`
/// describes the subset selecting pool[k] for every set bit k of `m`; the
/// empty subset is never marked effective.
struct EffectTable {
  std::vector<ArgIndex> pool;
  std::vector<std::uint8_t> effective;

  ArgSet subset(std::uint64_t mask) const { return expand_subset(pool, mask); }
  std::uint64_t subset_count() const { return std::uint64_t{1} << pool.size(); }
};

namespace kernels {

template <typename Holds>
void fill_effect_table_serial(EffectTable& table, ArgSet revealed, Holds&& holds) {
  const std::uint64_t n = table.subset_count();
  table.effective.assign(n, 0);
  for (std::uint64_t m = 1; m < n; ++m) {
    table.effective[m] = holds(revealed | table.subset(m)) ? 1 : 0;
  }
}

/// `holds` must be safe to call concurrently.
template <typename Holds>
void fill_effect_table_parallel(EffectTable& table, ArgSet revealed, Holds&& holds) {
  const std::int64_t n = static_cast<std::int64_t>(table.subset_count());
  table.effective.assign(static_cast<std::size_t>(n), 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t m = 1; m < n; ++m) {
    try {
      table.effective[static_cast<std::size_t>(m)] =
          holds(revealed | table.subset(static_cast<std::uint64_t>(m))) ? 1 : 0;
    } catch (...) {
#pragma omp critical(stratarg_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Masks of effective subsets with no effective nonempty proper subset, in
/// increasing mask order.
std::vector<std::uint64_t> minimal_masks_serial(const EffectTable& table);
std::vector<std::uint64_t> minimal_masks_parallel(const EffectTable& table);

}  // namespace kernels

template <typename Holds>
void fill_effect_table(EffectTable& table, ArgSet revealed, Holds&& holds, Execution exec) {
  if (exec == Execution::parallel) {
    kernels::fill_effect_table_parallel(table, revealed, holds);
  } else {
    kernels::fill_effect_table_serial(table, revealed, holds);
  }
}

inline std::vector<std::uint64_t> minimal_masks(const EffectTable& table, Execution exec) {
  return exec == Execution::parallel ? kernels::minimal_masks_parallel(table)
                                     : kernels::minimal_masks_serial(table);
}

}  // namespace stratarg
