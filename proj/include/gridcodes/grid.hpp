#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridcodes/count.hpp"

namespace gridcodes {

using Coord = std::int64_t;

/// An n-tuple of integer coordinates. Ordered lexicographically.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;

 private:
  std::vector<Coord> coords_;
};

/// The box [0, m_1 - 1] x ... x [0, m_n - 1], stored by its side lengths m_i.
class Grid {
 public:
  explicit Grid(std::vector<Coord> dims);
  Grid(std::initializer_list<Coord> dims) : Grid(std::vector<Coord>(dims)) {}

  std::size_t dimension() const { return dims_.size(); }
  std::span<const Coord> dims() const { return dims_; }
  Coord side(std::size_t i) const { return dims_[i]; }

  /// Number of points, exact.
  Count volume() const;
  /// Largest Manhattan distance between two points: sum of (m_i - 1).
  Coord diameter() const;

  bool contains(const Point& p) const;
  /// Throws DomainError naming the first offending coordinate.
  void require_contains(const Point& p, std::string_view what = "point") const;

  bool operator==(const Grid&) const = default;

 private:
  std::vector<Coord> dims_;
};

/// Upper limit on the number of points an exhaustive routine may visit.
struct EnumerationBudget {
  std::uint64_t max_points = 10'000'000;
};

/// Throws BudgetError unless `points` fits in the budget.
void require_within_budget(const Count& points, const EnumerationBudget& budget,
                           std::string_view what);

/// All points of the grid in lexicographic order.
std::vector<Point> enumerate_grid(const Grid& g, const EnumerationBudget& budget = {});

/// Position of p in the lexicographic enumeration of g.
std::size_t linear_index(const Grid& g, const Point& p);

/// "5,2" -> Grid{5, 2}. Throws DomainError on malformed text.
Grid parse_grid(std::string_view text);
/// "4,1" -> Point{4, 1}.
Point parse_point(std::string_view text);
/// Comma-separated list of non-negative integers.
std::vector<Coord> parse_coord_list(std::string_view text, std::string_view what);

std::string to_string(const Point& p);
std::string to_string(const Grid& g);

}  // namespace gridcodes
