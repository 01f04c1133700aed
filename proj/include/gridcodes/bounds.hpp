#pragma once

#include <cstddef>

#include "gridcodes/count.hpp"
#include "gridcodes/grid.hpp"

namespace gridcodes {

/// Size of the Manhattan r-ball in Z^n: sum_{j<=min(r,n)} 2^j C(n,j) C(r,j).
Count zn_ball_size(std::size_t n, Coord r);

struct BoundReport {
  Grid grid;
  Coord distance = 1;
  Coord packing_radius = 0;   // floor((d-1)/2)
  Count hamming_upper;        // floor(volume / eta_t)
  Count gv_lower_strong;      // ceil(volume / gamma_{d-1})
  Count gv_lower_weak;        // ceil(volume / zn_ball_size(n, d-1))
};

struct GvLowerBounds {
  Count weak;
  Count strong;
};

/// Sphere-packing upper bound on the size of a code with minimum distance d.
Count hamming_bound(const Grid& g, Coord d);
/// Gilbert-Varshamov style lower bounds, rounded up.
GvLowerBounds gv_bound(const Grid& g, Coord d);
/// All of the above in one record.
BoundReport bound_report(const Grid& g, Coord d);

}  // namespace gridcodes
