#pragma once

#include <cstddef>

namespace ehs::detail {

inline double pair_count(int n) noexcept { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

// Edge counts are integers, so a tiny absolute slack only absorbs rounding in
// the product fraction * C(n, 2).
inline bool at_most_fraction_of_pairs(std::size_t edges, double fraction, int n) noexcept {
  return static_cast<double>(edges) <= fraction * pair_count(n) + 1e-9;
}

inline bool at_least_fraction_of_pairs(std::size_t edges, double fraction, int n) noexcept {
  return static_cast<double>(edges) + 1e-9 >= fraction * pair_count(n);
}

}  // namespace ehs::detail
