#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gridcodes/count.hpp"
#include "gridcodes/grid.hpp"

namespace gridcodes {

// ---------------------------------------------------------------------------
// Extremal centers
// ---------------------------------------------------------------------------

/// Product of {floor((m_i-1)/2), ceil((m_i-1)/2)}; 2^{#even m_i} points.
std::vector<Point> innermost_set(const Grid& g);
/// Product of {0, m_i-1}: the corners.
std::vector<Point> outermost_set(const Grid& g);

// ---------------------------------------------------------------------------
// Minimum ball size (corner balls)
// ---------------------------------------------------------------------------

/// Number of lattice points of the non-negative orthant within Manhattan
/// radius r of the origin in dimension n: sum_{j<=r} C(j+n-1, j).
/// Zero for negative r.
Count simplex_count(std::size_t n, Coord r);

/// One level X_k of the exclusion family: the k-subsets J of coordinates whose
/// slack t_J = r - sum_{j in J} m_j is non-negative.
struct ExclusionLevel {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> subsets;  // 0-based, each sorted
  std::vector<Coord> slack;                       // t_J, parallel to subsets
};

/// X_1, ..., X_w for the given side lengths and radius (empty when r < min m_i).
/// Built level by level; a (k+1)-set is only generated from a k-set in the
/// previous level, since supersets of excluded sets are excluded.
std::vector<ExclusionLevel> exclusion_levels(std::span<const Coord> dims, Coord r);

/// eta_r of the box with the given side lengths, by inclusion-exclusion over
/// the exclusion family. Side lengths equal to 1 are dropped first. Negative
/// radius gives 0.
Count eta_count(std::span<const Coord> dims, Coord r);

/// Equal-side shortcut: n sides of length m.
Count eta_cube(std::size_t n, Coord m, Coord r);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class BallKind { eta, gamma, at_point };

enum class FormulaPath {
  formula_direct,
  formula_inclusion_exclusion,
  gamma_trivial_small,
  gamma_trivial_large,
  gamma_recursive,
  oracle,
};

std::string_view to_string(BallKind kind);
std::string_view to_string(FormulaPath path);

struct BallSizeReport {
  Grid grid;
  Coord radius = 0;
  BallKind kind = BallKind::eta;
  Count value;
  FormulaPath path = FormulaPath::formula_direct;
  std::optional<Point> center;  // set for kind == at_point
};

/// Smallest |B_r(x)| over x in the grid.
BallSizeReport eta(const Grid& g, Coord r);
/// Largest |B_r(x)| over x in the grid.
BallSizeReport gamma(const Grid& g, Coord r);
/// gamma for raw side lengths (may contain 1s); used by the recursion and bounds.
Count gamma_count(std::span<const Coord> dims, Coord r);

/// |B_r(x)| for an arbitrary center, via inclusion-exclusion over the centric
/// section plus the orthant pieces.
BallSizeReport ball_size_at(const Grid& g, const Point& x, Coord r);

/// Same as ball_size_at, but also enumerates the ball (subject to the budget)
/// and throws std::logic_error if the two disagree.
BallSizeReport verified_ball_size_at(const Grid& g, const Point& x, Coord r,
                                     const EnumerationBudget& budget = {});

// ---------------------------------------------------------------------------
// Ball decompositions
// ---------------------------------------------------------------------------

enum class SliceSide { plus, minus, equator };

/// Points of B_r(x) whose last coordinate is x_n + offset (plus), x_n - offset
/// (minus) or x_n (equator, offset 0). Only slices meeting the grid are kept.
struct BallSlice {
  SliceSide side = SliceSide::equator;
  Coord offset = 0;
  Coord sub_radius = 0;  // r - offset
  std::vector<Point> points;
  /// |B_{sub_radius}(x without last coord)| in the grid without its last side.
  Count expected_size;
};

std::vector<BallSlice> decompose_ball_slices(const Grid& g, const Point& x, Coord r,
                                             const EnumerationBudget& budget = {});

/// Points a of B_r(x) with sign(a_i - x_i) = signs_i for every i.
struct OrthantPiece {
  std::vector<int> signs;   // each +1 or -1
  bool in_w = false;        // x + signs lies in the grid
  std::vector<Coord> sub_extents;  // s_i(b); meaningful when in_w
  std::vector<Point> points;
  /// eta_{r-n} of prod [0, s_i(b)] when in_w, else 0.
  Count expected_size;
};

struct OrthantDecomposition {
  std::vector<Point> centric;  // points sharing at least one coordinate with x
  std::vector<OrthantPiece> orthants;  // 2^n pieces when r >= n, none otherwise
};

OrthantDecomposition decompose_ball_orthants(const Grid& g, const Point& x, Coord r,
                                             const EnumerationBudget& budget = {});

}  // namespace gridcodes
