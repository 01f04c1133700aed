#include "gridcodes/bounds.hpp"

#include <algorithm>

#include "gridcodes/ball.hpp"
#include "gridcodes/errors.hpp"

namespace gridcodes {

Count zn_ball_size(std::size_t n, Coord r) {
  if (r < 0) return 0;
  const std::uint64_t ur = static_cast<std::uint64_t>(r);
  const std::uint64_t top = std::min<std::uint64_t>(ur, n);
  Count total = 0;
  Count power = 1;
  for (std::uint64_t j = 0; j <= top; ++j) {
    total += power * binomial(n, j) * binomial(ur, j);
    power *= 2;
  }
  return total;
}

namespace {

void require_distance(Coord d) {
  if (d < 1) throw DomainError("design distance must be at least 1, got " + std::to_string(d));
}

}  // namespace

Count hamming_bound(const Grid& g, Coord d) {
  require_distance(d);
  const Coord t = (d - 1) / 2;
  return floor_div(g.volume(), eta(g, t).value);
}

GvLowerBounds gv_bound(const Grid& g, Coord d) {
  require_distance(d);
  const Count volume = g.volume();
  return {ceil_div(volume, zn_ball_size(g.dimension(), d - 1)),
          ceil_div(volume, gamma(g, d - 1).value)};
}

BoundReport bound_report(const Grid& g, Coord d) {
  auto [weak, strong] = gv_bound(g, d);
  return {g, d, (d - 1) / 2, hamming_bound(g, d), std::move(strong), std::move(weak)};
}

}  // namespace gridcodes
