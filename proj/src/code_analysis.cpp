#include "gridcodes/code_analysis.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "gridcodes/ball.hpp"
#include "gridcodes/errors.hpp"
#include "gridcodes/metrics.hpp"

namespace gridcodes {

GridCode::GridCode(Grid grid, std::vector<Point> codewords)
    : grid_(std::move(grid)), codewords_(std::move(codewords)) {
  if (codewords_.empty()) throw DomainError("a code needs at least one codeword");
  std::set<Point> seen;
  for (const auto& c : codewords_) {
    grid_.require_contains(c, "codeword");
    if (!seen.insert(c).second) throw DomainError("duplicate codeword " + to_string(c));
  }
}

namespace {

// Multi-source breadth-first search on the grid graph; returns the largest
// distance from any grid point to its nearest codeword.
Coord farthest_point_distance(const GridCode& code, const EnumerationBudget& budget) {
  const Grid& g = code.grid();
  require_within_budget(g.volume(), budget, "covering radius scan");
  const std::size_t n = g.dimension();
  const std::size_t volume = static_cast<std::size_t>(g.volume());
  std::vector<std::size_t> stride(n);
  std::size_t s = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride[i] = s;
    s *= static_cast<std::size_t>(g.side(i));
  }
  constexpr Coord kUnseen = -1;
  std::vector<Coord> dist(volume, kUnseen);
  std::deque<std::size_t> queue;
  for (const auto& c : code.codewords()) {
    const std::size_t idx = linear_index(g, c);
    dist[idx] = 0;
    queue.push_back(idx);
  }
  Coord farthest = 0;
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    farthest = std::max(farthest, dist[idx]);
    for (std::size_t i = 0; i < n; ++i) {
      const auto coord = static_cast<Coord>((idx / stride[i]) % static_cast<std::size_t>(g.side(i)));
      if (coord > 0 && dist[idx - stride[i]] == kUnseen) {
        dist[idx - stride[i]] = dist[idx] + 1;
        queue.push_back(idx - stride[i]);
      }
      if (coord + 1 < g.side(i) && dist[idx + stride[i]] == kUnseen) {
        dist[idx + stride[i]] = dist[idx] + 1;
        queue.push_back(idx + stride[i]);
      }
    }
  }
  return farthest;
}

}  // namespace

Coord covering_radius(const GridCode& code, const EnumerationBudget& budget) {
  return farthest_point_distance(code, budget);
}

bool covering_property(const GridCode& code, Coord r, const EnumerationBudget& budget) {
  if (r < 0) throw DomainError("radius must be non-negative");
  return farthest_point_distance(code, budget) <= r;
}

CodeAnalysis analyze(const GridCode& code, std::span<const Coord> covering_radii,
                     const EnumerationBudget& budget) {
  const Grid& g = code.grid();
  CodeAnalysis a;
  a.size = code.size();
  if (code.size() >= 2) {
    const auto manhattan = code_distance_range(g, code.codewords(), Metric::manhattan);
    a.min_manhattan = manhattan.min;
    a.max_manhattan = manhattan.max;
    a.min_lee = code_min_distance(g, code.codewords(), Metric::lee);
    a.min_hamming = code_min_distance(g, code.codewords(), Metric::hamming);
    a.packing_radius = (manhattan.min - 1) / 2;
  } else {
    a.packing_radius = g.diameter();
  }
  a.covering_radius = covering_radius(code, budget);
  a.perfect = code.size() == 1 ? a.covering_radius <= g.diameter()
                                : a.packing_radius == a.covering_radius;
  a.attains_hamming_bound = Count(code.size()) * eta(g, a.packing_radius).value == g.volume();
  for (Coord r : covering_radii) {
    if (r < 0) throw DomainError("covering radius query must be non-negative");
    a.covering.emplace_back(r, a.covering_radius <= r);
  }
  return a;
}

GridCode greedy_code(const Grid& g, Coord d, std::span<const std::size_t> order,
                     const EnumerationBudget& budget) {
  if (d < 1) throw DomainError("design distance must be at least 1");
  const auto points = enumerate_grid(g, budget);
  std::vector<std::size_t> scan(order.begin(), order.end());
  if (scan.empty()) {
    scan.resize(points.size());
    std::iota(scan.begin(), scan.end(), std::size_t{0});
  } else {
    std::vector<bool> hit(points.size(), false);
    if (scan.size() != points.size())
      throw DomainError("scan order must be a permutation of all grid points");
    for (std::size_t i : scan) {
      if (i >= points.size() || hit[i])
        throw DomainError("scan order must be a permutation of all grid points");
      hit[i] = true;
    }
  }
  std::vector<Point> chosen;
  for (std::size_t i : scan) {
    const auto& p = points[i];
    const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](const Point& c) {
      return detail::manhattan(c.coords(), p.coords()) >= d;
    });
    if (fits) chosen.push_back(p);
  }
  return GridCode(g, std::move(chosen));
}

namespace {

// Russian-doll search for a maximum clique of the compatibility graph.
// Vertices are settled from last to first; best_within_[i] is the largest
// clique among vertices i..n-1 and bounds every later subproblem. Each
// subproblem only asks whether vertex i extends to one more than the current
// best, so the first hit ends it.
class RussianDollSearch {
 public:
  RussianDollSearch(std::size_t n, std::vector<std::uint64_t> adjacency, std::uint64_t max_nodes)
      : n_(n),
        words_((n + 63) / 64),
        adj_(std::move(adjacency)),
        max_nodes_(max_nodes),
        best_within_(n + 1, 0),
        levels_((n + 2) * words_, 0),
        uncoloured_(words_, 0),
        pool_(words_, 0) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> best;
    for (std::size_t i = n_; i-- > 0;) {
      std::uint64_t* cand = level(0);
      const std::uint64_t* row = adjacency(i);
      for (std::size_t w = 0; w < words_; ++w) cand[w] = row[w];
      for (std::size_t w = 0; w <= i / 64; ++w) {
        const std::size_t hi = std::min<std::size_t>(64, i + 1 - w * 64);
        cand[w] &= hi == 64 ? 0 : ~std::uint64_t{0} << hi;
      }
      current_.assign(1, i);
      if (extend(cand, best.size(), 1)) best = current_;
      best_within_[i] = best.size();
    }
    return best;
  }

 private:
  std::uint64_t* level(std::size_t depth) { return levels_.data() + depth * words_; }
  const std::uint64_t* adjacency(std::size_t v) const { return adj_.data() + v * words_; }

  bool extend(std::uint64_t* cand, std::size_t need, std::size_t depth) {
    if (++nodes_ > max_nodes_)
      throw BudgetError("exact search exceeded " + std::to_string(max_nodes_) +
                        " nodes; use greedy search instead");
    if (need == 0) return true;
    std::uint64_t* next = level(depth);
    for (std::size_t w = 0; w < words_;) {
      if (cand[w] == 0) {
        ++w;
        continue;
      }
      const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(cand[w]));
      if (best_within_[v] < need) return false;
      std::size_t available = 0;
      for (std::size_t t = w; t < words_; ++t) available += static_cast<std::size_t>(std::popcount(cand[t]));
      if (available < need) return false;
      if (need > 1 && colour_bound(cand, w, need) < need) return false;
      cand[w] &= cand[w] - 1;
      const std::uint64_t* row = adjacency(v);
      for (std::size_t t = 0; t < w; ++t) next[t] = 0;
      for (std::size_t t = w; t < words_; ++t) next[t] = cand[t] & row[t];
      current_.push_back(v);
      if (extend(next, need - 1, depth + 1)) return true;
      current_.pop_back();
    }
    return false;
  }

  // Greedy colouring of the candidates into classes of pairwise incompatible
  // vertices; stops counting at `limit`.
  std::size_t colour_bound(const std::uint64_t* cand, std::size_t from, std::size_t limit) {
    for (std::size_t t = from; t < words_; ++t) uncoloured_[t] = cand[t];
    std::size_t k = 0;
    while (true) {
      bool any = false;
      for (std::size_t t = from; t < words_ && !any; ++t) any = uncoloured_[t] != 0;
      if (!any || ++k >= limit) return k;
      for (std::size_t t = from; t < words_; ++t) pool_[t] = uncoloured_[t];
      for (std::size_t w = from; w < words_;) {
        if (pool_[w] == 0) {
          ++w;
          continue;
        }
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(pool_[w]));
        pool_[w] &= pool_[w] - 1;
        uncoloured_[w] &= ~(std::uint64_t{1} << (v % 64));
        const std::uint64_t* row = adjacency(v);
        for (std::size_t t = w; t < words_; ++t) pool_[t] &= ~row[t];
      }
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_within_;
  std::vector<std::uint64_t> levels_;
  std::vector<std::uint64_t> uncoloured_;
  std::vector<std::uint64_t> pool_;
  std::vector<std::size_t> current_;
};

}  // namespace

MaxCodeResult exact_max_code(const Grid& g, Coord d, const ExactSearchLimits& limits) {
  if (d < 1) throw DomainError("design distance must be at least 1");
  if (g.volume() > limits.max_volume)
    throw BudgetError("exact search limited to grids of volume " +
                      std::to_string(limits.max_volume) + " (got " + g.volume().str() +
                      "); use greedy search instead");
  if (d == 1) return {static_cast<std::size_t>(g.volume()), GridCode(g, enumerate_grid(g))};

  // Points in slab order: lexicographic with the longest axis varying slowest,
  // so every suffix of the order is a slab plus part of one layer.
  const std::size_t n = g.dimension();
  std::vector<std::size_t> axes(n);
  std::iota(axes.begin(), axes.end(), std::size_t{0});
  std::stable_sort(axes.begin(), axes.end(),
                   [&](std::size_t a, std::size_t b) { return g.side(a) > g.side(b); });
  std::vector<Coord> permuted_sides(n);
  for (std::size_t j = 0; j < n; ++j) permuted_sides[j] = g.side(axes[j]);
  std::vector<Point> points;
  for (const auto& q : enumerate_grid(Grid(permuted_sides))) {
    std::vector<Coord> p(n);
    for (std::size_t j = 0; j < n; ++j) p[axes[j]] = q[j];
    points.emplace_back(std::move(p));
  }

  const std::size_t volume = points.size();
  const std::size_t words = (volume + 63) / 64;
  std::vector<std::uint64_t> adjacency(volume * words, 0);
  for (std::size_t a = 0; a < volume; ++a)
    for (std::size_t b = a + 1; b < volume; ++b)
      if (detail::manhattan(points[a].coords(), points[b].coords()) >= d) {
        adjacency[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
        adjacency[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
      }

  RussianDollSearch search(volume, std::move(adjacency), limits.max_nodes);
  std::vector<Point> witness;
  for (std::size_t v : search.run()) witness.push_back(points[v]);
  std::sort(witness.begin(), witness.end());
  return {witness.size(), GridCode(g, std::move(witness))};
}

}  // namespace gridcodes
