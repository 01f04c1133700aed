#include "gridcodes/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "box.hpp"
#include "gridcodes/errors.hpp"

namespace gridcodes {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::manhattan: return "manhattan";
    case Metric::lee: return "lee";
    case Metric::hamming: return "hamming";
  }
  return "?";
}

Metric parse_metric(std::string_view text) {
  if (text == "manhattan") return Metric::manhattan;
  if (text == "lee") return Metric::lee;
  if (text == "hamming") return Metric::hamming;
  throw DomainError("unknown metric '" + std::string(text) + "'");
}

namespace detail {

Coord manhattan(std::span<const Coord> a, std::span<const Coord> b) {
  Coord d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

Coord lee(std::span<const Coord> dims, std::span<const Coord> a, std::span<const Coord> b) {
  Coord d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Coord diff = std::abs(a[i] - b[i]);
    d += std::min(diff, dims[i] - diff);
  }
  return d;
}

Coord hamming(std::span<const Coord> a, std::span<const Coord> b) {
  Coord d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

Coord distance(std::span<const Coord> dims, Metric metric, std::span<const Coord> a,
               std::span<const Coord> b) {
  switch (metric) {
    case Metric::manhattan: return manhattan(a, b);
    case Metric::lee: return lee(dims, a, b);
    case Metric::hamming: return hamming(a, b);
  }
  return 0;
}

}  // namespace detail

Coord manhattan_distance(const Grid& g, const Point& a, const Point& b) {
  return distance(g, Metric::manhattan, a, b);
}

Coord lee_distance(const Grid& g, const Point& a, const Point& b) {
  return distance(g, Metric::lee, a, b);
}

Coord hamming_distance(const Grid& g, const Point& a, const Point& b) {
  return distance(g, Metric::hamming, a, b);
}

Coord distance(const Grid& g, Metric metric, const Point& a, const Point& b) {
  g.require_contains(a);
  g.require_contains(b);
  return detail::distance(g.dims(), metric, a.coords(), b.coords());
}

std::vector<Point> enumerate_ball(const Grid& g, const BallSpec& spec, Metric metric,
                                  const EnumerationBudget& budget) {
  if (spec.radius < 0) throw DomainError("ball radius must be non-negative");
  g.require_contains(spec.center, "ball center");
  const std::size_t n = g.dimension();
  std::vector<Coord> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (metric == Metric::manhattan) {
      lo[i] = std::max<Coord>(0, spec.center[i] - spec.radius);
      hi[i] = std::min<Coord>(g.side(i) - 1, spec.center[i] + spec.radius);
    } else {
      lo[i] = 0;
      hi[i] = g.side(i) - 1;
    }
  }
  require_within_budget(detail::box_size(lo, hi), budget, "ball enumeration");
  std::vector<Point> out;
  const auto center = spec.center.coords();
  detail::for_each_in_box(lo, hi, [&](std::span<const Coord> p) {
    if (detail::distance(g.dims(), metric, center, p) <= spec.radius)
      out.emplace_back(std::vector<Coord>(p.begin(), p.end()));
  });
  return out;
}

DistanceRange code_distance_range(const Grid& g, std::span<const Point> points, Metric metric) {
  if (points.size() < 2)
    throw DomainError("minimum distance undefined for fewer than two points");
  for (const auto& p : points) g.require_contains(p, "codeword");
  DistanceRange range{std::numeric_limits<Coord>::max(), 0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Coord d = detail::distance(g.dims(), metric, points[i].coords(), points[j].coords());
      range.min = std::min(range.min, d);
      range.max = std::max(range.max, d);
    }
  }
  return range;
}

Coord code_min_distance(const Grid& g, std::span<const Point> points, Metric metric) {
  return code_distance_range(g, points, metric).min;
}

}  // namespace gridcodes
