#include "gridcodes/grid.hpp"

#include <charconv>
#include <sstream>

#include "box.hpp"
#include "gridcodes/errors.hpp"

namespace gridcodes {

Grid::Grid(std::vector<Coord> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DomainError("grid must have at least one dimension");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1)
      throw DomainError("grid side m_" + std::to_string(i + 1) + " = " +
                        std::to_string(dims_[i]) + " must be at least 1");
  }
}

Count Grid::volume() const {
  Count v = 1;
  for (Coord m : dims_) v *= m;
  return v;
}

Coord Grid::diameter() const {
  Coord d = 0;
  for (Coord m : dims_) d += m - 1;
  return d;
}

bool Grid::contains(const Point& p) const {
  if (p.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (p[i] < 0 || p[i] >= dims_[i]) return false;
  return true;
}

void Grid::require_contains(const Point& p, std::string_view what) const {
  if (p.size() != dims_.size())
    throw DomainError(std::string(what) + " " + to_string(p) + " has " +
                      std::to_string(p.size()) + " coordinates, grid has " +
                      std::to_string(dims_.size()));
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (p[i] < 0 || p[i] >= dims_[i])
      throw DomainError(std::string(what) + " " + to_string(p) + ": coordinate " +
                        std::to_string(i + 1) + " = " + std::to_string(p[i]) +
                        " outside [0," + std::to_string(dims_[i] - 1) + "]");
  }
}

void require_within_budget(const Count& points, const EnumerationBudget& budget,
                           std::string_view what) {
  if (points > budget.max_points)
    throw BudgetError(std::string(what) + " would visit " + points.str() +
                      " points, enumeration budget is " + std::to_string(budget.max_points));
}

std::vector<Point> enumerate_grid(const Grid& g, const EnumerationBudget& budget) {
  require_within_budget(g.volume(), budget, "grid enumeration");
  std::vector<Coord> lo(g.dimension(), 0);
  std::vector<Coord> hi(g.dims().begin(), g.dims().end());
  for (auto& h : hi) --h;
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(g.volume()));
  detail::for_each_in_box(lo, hi, [&](std::span<const Coord> c) {
    out.emplace_back(std::vector<Coord>(c.begin(), c.end()));
  });
  return out;
}

std::size_t linear_index(const Grid& g, const Point& p) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.dimension(); ++i)
    idx = idx * static_cast<std::size_t>(g.side(i)) + static_cast<std::size_t>(p[i]);
  return idx;
}

std::vector<Coord> parse_coord_list(std::string_view text, std::string_view what) {
  std::vector<Coord> out;
  if (text.empty()) throw DomainError(std::string(what) + ": empty list");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Coord value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0)
      throw DomainError(std::string(what) + ": '" + std::string(item) +
                        "' is not a non-negative integer");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Grid parse_grid(std::string_view text) { return Grid(parse_coord_list(text, "grid")); }

Point parse_point(std::string_view text) { return Point(parse_coord_list(text, "point")); }

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::string to_string(const Grid& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.dimension(); ++i) os << (i ? "," : "") << g.side(i);
  return os.str();
}

}  // namespace gridcodes
