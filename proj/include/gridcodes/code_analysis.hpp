#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gridcodes/count.hpp"
#include "gridcodes/grid.hpp"

namespace gridcodes {

/// A non-empty, duplicate-free set of points of a grid. Codewords keep the
/// order they were given in.
class GridCode {
 public:
  GridCode(Grid grid, std::vector<Point> codewords);

  const Grid& grid() const { return grid_; }
  std::span<const Point> codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }

 private:
  Grid grid_;
  std::vector<Point> codewords_;
};

struct CodeAnalysis {
  std::size_t size = 0;
  // Pairwise quantities, absent for single-word codes.
  std::optional<Coord> min_manhattan;
  std::optional<Coord> min_lee;
  std::optional<Coord> min_hamming;
  std::optional<Coord> max_manhattan;
  Coord packing_radius = 0;
  Coord covering_radius = 0;
  bool perfect = false;
  bool attains_hamming_bound = false;
  std::vector<std::pair<Coord, bool>> covering;  // (r, r-covering property)
};

/// Smallest s such that the s-balls around the codewords cover the grid.
Coord covering_radius(const GridCode& code, const EnumerationBudget& budget = {});
/// Whether the r-balls around the codewords cover the grid.
bool covering_property(const GridCode& code, Coord r, const EnumerationBudget& budget = {});

/// Parameters of an explicit code. A single-word code gets packing radius
/// equal to the grid diameter.
CodeAnalysis analyze(const GridCode& code, std::span<const Coord> covering_radii = {},
                     const EnumerationBudget& budget = {});

struct ExactSearchLimits {
  std::uint64_t max_volume = 512;
  /// Branch-and-bound nodes visited before giving up with BudgetError.
  std::uint64_t max_nodes = 50'000'000;
};

struct MaxCodeResult {
  std::size_t size = 0;
  GridCode witness;
};

/// Largest code with minimum Manhattan distance >= d, by Russian-doll branch
/// and bound over the compatibility graph (points joined when at distance
/// >= d). The witness is deterministic.
/// Throws BudgetError when the grid is larger than the volume limit or the
/// search visits more nodes than allowed.
MaxCodeResult exact_max_code(const Grid& g, Coord d, const ExactSearchLimits& limits = {});

/// Greedy maximal code: scan points in the given order (indices into the
/// lexicographic enumeration; empty means lexicographic) and keep every point
/// at distance >= d from those already kept.
GridCode greedy_code(const Grid& g, Coord d, std::span<const std::size_t> order = {},
                     const EnumerationBudget& budget = {});

}  // namespace gridcodes
