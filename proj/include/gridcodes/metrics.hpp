#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gridcodes/grid.hpp"

namespace gridcodes {

enum class Metric { manhattan, lee, hamming };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view text);

Coord manhattan_distance(const Grid& g, const Point& a, const Point& b);
/// Per-coordinate circular distance min{|a_i - b_i|, m_i - |a_i - b_i|}, summed.
Coord lee_distance(const Grid& g, const Point& a, const Point& b);
Coord hamming_distance(const Grid& g, const Point& a, const Point& b);
Coord distance(const Grid& g, Metric metric, const Point& a, const Point& b);

namespace detail {
// No containment checks; callers have validated both points.
Coord manhattan(std::span<const Coord> a, std::span<const Coord> b);
Coord lee(std::span<const Coord> dims, std::span<const Coord> a, std::span<const Coord> b);
Coord hamming(std::span<const Coord> a, std::span<const Coord> b);
Coord distance(std::span<const Coord> dims, Metric metric, std::span<const Coord> a,
               std::span<const Coord> b);
}  // namespace detail

struct BallSpec {
  Point center;
  Coord radius = 0;
};

/// {p in grid : metric(center, p) <= radius}, lexicographically sorted.
/// The budget bounds the number of candidate points scanned.
std::vector<Point> enumerate_ball(const Grid& g, const BallSpec& spec, Metric metric,
                                  const EnumerationBudget& budget = {});

struct DistanceRange {
  Coord min = 0;
  Coord max = 0;
};

/// Minimum and maximum pairwise distance of a point set with at least two points.
DistanceRange code_distance_range(const Grid& g, std::span<const Point> points, Metric metric);
Coord code_min_distance(const Grid& g, std::span<const Point> points, Metric metric);

}  // namespace gridcodes
