#pragma once

#include <span>
#include <vector>

#include "gridcodes/count.hpp"
#include "gridcodes/grid.hpp"

namespace gridcodes::detail {

// Number of integer points in prod [lo_i, hi_i]; zero if any range is empty.
inline Count box_size(std::span<const Coord> lo, std::span<const Coord> hi) {
  Count size = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    size *= hi[i] - lo[i] + 1;
  }
  return size;
}

// Visits prod [lo_i, hi_i] in lexicographic order (last coordinate fastest).
template <typename Fn>
void for_each_in_box(std::span<const Coord> lo, std::span<const Coord> hi, Fn&& fn) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (hi[i] < lo[i]) return;
  std::vector<Coord> cur(lo.begin(), lo.end());
  while (true) {
    fn(std::span<const Coord>(cur));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace gridcodes::detail
