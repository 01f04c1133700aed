#include "gridcodes/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

#include "box.hpp"
#include "gridcodes/bounds.hpp"
#include "gridcodes/errors.hpp"
#include "gridcodes/metrics.hpp"

namespace gridcodes {

namespace {

std::vector<Coord> drop_frozen(std::span<const Coord> dims) {
  std::vector<Coord> out;
  for (Coord m : dims)
    if (m > 1) out.push_back(m);
  return out;
}

Count product(std::span<const Coord> dims) {
  Count v = 1;
  for (Coord m : dims) v *= m;
  return v;
}

Coord sum_minus_one(std::span<const Coord> dims) {
  Coord s = 0;
  for (Coord m : dims) s += m - 1;
  return s;
}

void require_radius(Coord r) {
  if (r < 0) throw DomainError("radius must be non-negative, got " + std::to_string(r));
}

Count sign_term(std::size_t k) { return (k % 2 == 1) ? Count(1) : Count(-1); }  // (-1)^{k+1}

struct EtaResult {
  Count value;
  FormulaPath path;
};

EtaResult eta_with_path(std::span<const Coord> raw_dims, Coord r) {
  if (r < 0) return {0, FormulaPath::formula_direct};
  const std::vector<Coord> dims = drop_frozen(raw_dims);
  const std::size_t n = dims.size();
  if (n == 0) return {1, FormulaPath::formula_direct};
  if (r >= sum_minus_one(dims)) return {product(dims), FormulaPath::formula_direct};
  if (r < *std::min_element(dims.begin(), dims.end()))
    return {simplex_count(n, r), FormulaPath::formula_direct};

  std::map<Coord, Count> simplex_memo;
  auto simplex = [&](Coord t) -> const Count& {
    auto it = simplex_memo.find(t);
    if (it == simplex_memo.end()) it = simplex_memo.emplace(t, simplex_count(n, t)).first;
    return it->second;
  };

  Count excluded = 0;
  for (const auto& level : exclusion_levels(dims, r)) {
    Count level_sum = 0;
    for (Coord t : level.slack) level_sum += simplex(t);
    excluded += sign_term(level.k) * level_sum;
  }
  Count value = simplex(r) - excluded;

  if (std::all_of(dims.begin(), dims.end(), [&](Coord m) { return m == dims.front(); })) {
    const Count cube = eta_cube(n, dims.front(), r);
    if (cube != value)
      throw std::logic_error("eta: equal-side shortcut " + cube.str() +
                             " disagrees with inclusion-exclusion " + value.str());
  }
  return {std::move(value), FormulaPath::formula_inclusion_exclusion};
}

// Memo key: sorted side lengths and radius (gamma is permutation invariant).
using GammaMemo = std::map<std::pair<std::vector<Coord>, Coord>, Count>;

// s_i(b) for the orthant sub-grid of center x; false when x + b leaves the grid.
bool orthant_extents(std::span<const Coord> dims, std::span<const Coord> x,
                     std::span<const int> signs, std::vector<Coord>& extents) {
  extents.resize(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const Coord step = x[i] + signs[i];
    if (step < 0 || step >= dims[i]) return false;
    extents[i] = signs[i] > 0 ? std::abs(dims[i] - (x[i] + 2)) : std::abs(x[i] - 1);
  }
  return true;
}

// sum over b in W(x) of eta_{r-n}(prod [0, s_i(b)]); zero when r < n.
Count orthant_total(std::span<const Coord> dims, std::span<const Coord> x, Coord r) {
  const std::size_t n = dims.size();
  if (r < static_cast<Coord>(n)) return 0;
  Count total = 0;
  std::vector<int> signs(n);
  std::vector<Coord> extents, sides(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? 1 : -1;
    if (!orthant_extents(dims, x, signs, extents)) continue;
    for (std::size_t i = 0; i < n; ++i) sides[i] = extents[i] + 1;
    total += eta_count(sides, r - static_cast<Coord>(n));
  }
  return total;
}

struct GammaResult {
  Count value;
  FormulaPath path;
};

GammaResult gamma_impl(std::vector<Coord> dims, Coord r, GammaMemo& memo);

Count gamma_memo(std::vector<Coord> dims, Coord r, GammaMemo& memo) {
  std::sort(dims.begin(), dims.end());
  auto key = std::make_pair(dims, r);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Count value = gamma_impl(std::move(dims), r, memo).value;
  memo.emplace(std::move(key), value);
  return value;
}

GammaResult gamma_impl(std::vector<Coord> raw, Coord r, GammaMemo& memo) {
  const std::vector<Coord> dims = drop_frozen(raw);
  const std::size_t n = dims.size();
  if (n == 0 || r == 0) return {1, FormulaPath::formula_direct};

  Coord min_half = dims.front();
  Coord ceil_sum = 0;
  for (Coord m : dims) {
    min_half = std::min(min_half, (m - 1) / 2);
    ceil_sum += m / 2;  // ceil((m-1)/2)
  }
  if (r <= min_half) return {zn_ball_size(n, r), FormulaPath::gamma_trivial_small};
  if (r >= ceil_sum) return {product(dims), FormulaPath::gamma_trivial_large};
  if (n > 20) throw BudgetError("gamma recursion limited to 20 non-degenerate dimensions");

  std::vector<Coord> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (dims[i] - 1) / 2;

  Count value = (n == 1) ? Count(1) : sign_term(n);
  if (n >= 2) {
    std::vector<Coord> rest;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      rest.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (!((mask >> i) & 1)) rest.push_back(dims[i]);
      const std::size_t k = n - rest.size();
      value += sign_term(k) * gamma_memo(rest, r, memo);
    }
  }
  value += orthant_total(dims, x, r);
  return {std::move(value), FormulaPath::gamma_recursive};
}

// |B_r(x) ∩ G| over the coordinates in `mask`, by the centric/orthant formula.
class CentricOrthantCounter {
 public:
  CentricOrthantCounter(std::span<const Coord> dims, std::span<const Coord> x, Coord r)
      : dims_(dims), x_(x), r_(r), memo_(std::size_t{1} << dims.size()) {}

  Count count(std::uint64_t mask) {
    if (memo_[mask]) return *memo_[mask];
    std::vector<Coord> sub_dims, sub_x;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if ((mask >> i) & 1) {
        idx.push_back(i);
        sub_dims.push_back(dims_[i]);
        sub_x.push_back(x_[i]);
      }
    }
    const std::size_t n = idx.size();
    Count value = (n == 1) ? Count(1) : sign_term(n);
    if (n >= 2) {
      // proper non-empty J ⊂ idx, encoded over the positions of idx
      for (std::uint64_t sub = 1; sub + 1 < (std::uint64_t{1} << n); ++sub) {
        std::uint64_t remaining = mask;
        std::size_t k = 0;
        for (std::size_t p = 0; p < n; ++p) {
          if ((sub >> p) & 1) {
            remaining &= ~(std::uint64_t{1} << idx[p]);
            ++k;
          }
        }
        value += sign_term(k) * count(remaining);
      }
    }
    value += orthant_total(sub_dims, sub_x, r_);
    memo_[mask] = value;
    return value;
  }

 private:
  std::span<const Coord> dims_;
  std::span<const Coord> x_;
  Coord r_;
  std::vector<std::optional<Count>> memo_;
};

// |B_r(x) ∩ G| by slicing along one coordinate at a time.
Count count_by_slices(std::span<const Coord> dims, std::span<const Coord> x, Coord r) {
  // table[rho] = ball size of radius rho over the coordinates processed so far
  std::vector<Count> table(static_cast<std::size_t>(r) + 1, Count(1));
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::vector<Count> next(table.size(), Count(0));
    for (Coord rho = 0; rho <= r; ++rho) {
      const Coord lo = std::max<Coord>(0, x[i] - rho);
      const Coord hi = std::min<Coord>(dims[i] - 1, x[i] + rho);
      Count s = 0;
      for (Coord a = lo; a <= hi; ++a) s += table[static_cast<std::size_t>(rho - std::abs(a - x[i]))];
      next[static_cast<std::size_t>(rho)] = std::move(s);
    }
    table = std::move(next);
  }
  return table.back();
}

std::vector<Coord> ball_box_lo(const Grid& g, const Point& x, Coord r) {
  std::vector<Coord> lo(g.dimension());
  for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::max<Coord>(0, x[i] - r);
  return lo;
}

std::vector<Coord> ball_box_hi(const Grid& g, const Point& x, Coord r) {
  std::vector<Coord> hi(g.dimension());
  for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = std::min<Coord>(g.side(i) - 1, x[i] + r);
  return hi;
}

}  // namespace

std::vector<Point> innermost_set(const Grid& g) {
  std::vector<Coord> lo(g.dimension()), hi(g.dimension());
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    lo[i] = (g.side(i) - 1) / 2;
    hi[i] = g.side(i) / 2;
  }
  std::vector<Point> out;
  detail::for_each_in_box(lo, hi, [&](std::span<const Coord> p) {
    out.emplace_back(std::vector<Coord>(p.begin(), p.end()));
  });
  return out;
}

std::vector<Point> outermost_set(const Grid& g) {
  const std::size_t n = g.dimension();
  std::vector<Point> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Coord> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = ((mask >> (n - 1 - i)) & 1) ? g.side(i) - 1 : 0;
    out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Count simplex_count(std::size_t n, Coord r) {
  if (r < 0) return 0;
  if (n == 0) return 1;
  Count total = 0;
  for (Coord j = 0; j <= r; ++j)
    total += binomial(static_cast<std::uint64_t>(j) + n - 1, static_cast<std::uint64_t>(j));
  return total;
}

std::vector<ExclusionLevel> exclusion_levels(std::span<const Coord> dims, Coord r) {
  std::vector<ExclusionLevel> levels;
  ExclusionLevel first{1, {}, {}};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (r - dims[i] >= 0) {
      first.subsets.push_back({i});
      first.slack.push_back(r - dims[i]);
    }
  }
  if (first.subsets.empty()) return levels;
  levels.push_back(std::move(first));
  while (true) {
    const ExclusionLevel& prev = levels.back();
    ExclusionLevel next{prev.k + 1, {}, {}};
    for (std::size_t s = 0; s < prev.subsets.size(); ++s) {
      const auto& subset = prev.subsets[s];
      for (std::size_t i = subset.back() + 1; i < dims.size(); ++i) {
        const Coord t = prev.slack[s] - dims[i];
        if (t < 0) continue;
        auto grown = subset;
        grown.push_back(i);
        next.subsets.push_back(std::move(grown));
        next.slack.push_back(t);
      }
    }
    if (next.subsets.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

Count eta_count(std::span<const Coord> dims, Coord r) { return eta_with_path(dims, r).value; }

Count eta_cube(std::size_t n, Coord m, Coord r) {
  if (r < 0) return 0;
  Count value = simplex_count(n, r);
  for (std::size_t k = 1; k <= n && static_cast<Coord>(k) * m <= r; ++k)
    value -= sign_term(k) * binomial(n, k) * simplex_count(n, r - static_cast<Coord>(k) * m);
  return value;
}

std::string_view to_string(BallKind kind) {
  switch (kind) {
    case BallKind::eta: return "eta";
    case BallKind::gamma: return "gamma";
    case BallKind::at_point: return "at";
  }
  return "?";
}

std::string_view to_string(FormulaPath path) {
  switch (path) {
    case FormulaPath::formula_direct: return "formula-direct";
    case FormulaPath::formula_inclusion_exclusion: return "formula-inclusion-exclusion";
    case FormulaPath::gamma_trivial_small: return "gamma-trivial-small";
    case FormulaPath::gamma_trivial_large: return "gamma-trivial-large";
    case FormulaPath::gamma_recursive: return "gamma-recursive";
    case FormulaPath::oracle: return "oracle";
  }
  return "?";
}

BallSizeReport eta(const Grid& g, Coord r) {
  require_radius(r);
  auto [value, path] = eta_with_path(g.dims(), r);
  return {g, r, BallKind::eta, std::move(value), path, std::nullopt};
}

Count gamma_count(std::span<const Coord> dims, Coord r) {
  if (r < 0) return 0;
  GammaMemo memo;
  return gamma_impl(std::vector<Coord>(dims.begin(), dims.end()), r, memo).value;
}

BallSizeReport gamma(const Grid& g, Coord r) {
  require_radius(r);
  GammaMemo memo;
  auto [value, path] = gamma_impl(std::vector<Coord>(g.dims().begin(), g.dims().end()), r, memo);
  return {g, r, BallKind::gamma, std::move(value), path, std::nullopt};
}

BallSizeReport ball_size_at(const Grid& g, const Point& x, Coord r) {
  require_radius(r);
  g.require_contains(x, "center");
  BallSizeReport report{g, r, BallKind::at_point, 1, FormulaPath::formula_direct, x};
  if (r == 0) return report;
  if (g.dimension() <= 16) {
    CentricOrthantCounter counter(g.dims(), x.coords(), r);
    report.value = counter.count((std::uint64_t{1} << g.dimension()) - 1);
    report.path = FormulaPath::formula_inclusion_exclusion;
  } else {
    report.value = count_by_slices(g.dims(), x.coords(), std::min(r, g.diameter()));
  }
  return report;
}

BallSizeReport verified_ball_size_at(const Grid& g, const Point& x, Coord r,
                                     const EnumerationBudget& budget) {
  BallSizeReport report = ball_size_at(g, x, r);
  const auto ball = enumerate_ball(g, {x, r}, Metric::manhattan, budget);
  if (Count(ball.size()) != report.value)
    throw std::logic_error("ball size formula gives " + report.value.str() +
                           " but enumeration finds " + std::to_string(ball.size()));
  return report;
}

std::vector<BallSlice> decompose_ball_slices(const Grid& g, const Point& x, Coord r,
                                             const EnumerationBudget& budget) {
  require_radius(r);
  g.require_contains(x, "center");
  require_within_budget(detail::box_size(ball_box_lo(g, x, r), ball_box_hi(g, x, r)), budget,
                        "slice decomposition");
  const std::size_t n = g.dimension();
  const std::size_t last = n - 1;
  std::vector<Coord> sub_dims(g.dims().begin(), g.dims().end() - 1);
  Point sub_center(std::vector<Coord>(x.coords().begin(), x.coords().end() - 1));

  auto make_slice = [&](SliceSide side, Coord offset) -> std::optional<BallSlice> {
    const Coord level = x[last] + (side == SliceSide::minus ? -offset : offset);
    if (level < 0 || level >= g.side(last)) return std::nullopt;
    BallSlice slice;
    slice.side = side;
    slice.offset = offset;
    slice.sub_radius = r - offset;
    std::vector<Coord> lo(n), hi(n);
    for (std::size_t i = 0; i < last; ++i) {
      lo[i] = std::max<Coord>(0, x[i] - slice.sub_radius);
      hi[i] = std::min<Coord>(g.side(i) - 1, x[i] + slice.sub_radius);
    }
    lo[last] = hi[last] = level;
    detail::for_each_in_box(lo, hi, [&](std::span<const Coord> p) {
      if (detail::manhattan(p.first(last), x.coords().first(last)) <= slice.sub_radius)
        slice.points.emplace_back(std::vector<Coord>(p.begin(), p.end()));
    });
    slice.expected_size =
        n == 1 ? Count(1) : ball_size_at(Grid(sub_dims), sub_center, slice.sub_radius).value;
    return slice;
  };

  std::vector<BallSlice> slices;
  if (auto s = make_slice(SliceSide::equator, 0)) slices.push_back(std::move(*s));
  for (SliceSide side : {SliceSide::plus, SliceSide::minus})
    for (Coord offset = 1; offset <= r; ++offset)
      if (auto s = make_slice(side, offset)) slices.push_back(std::move(*s));
  return slices;
}

OrthantDecomposition decompose_ball_orthants(const Grid& g, const Point& x, Coord r,
                                             const EnumerationBudget& budget) {
  require_radius(r);
  g.require_contains(x, "center");
  const auto box_lo = ball_box_lo(g, x, r);
  const auto box_hi = ball_box_hi(g, x, r);
  require_within_budget(detail::box_size(box_lo, box_hi), budget, "orthant decomposition");
  const std::size_t n = g.dimension();
  OrthantDecomposition out;

  // Centric section: union of the axis sections L_j.
  for (std::size_t j = 0; j < n; ++j) {
    auto lo = box_lo, hi = box_hi;
    lo[j] = hi[j] = x[j];
    detail::for_each_in_box(lo, hi, [&](std::span<const Coord> p) {
      if (detail::manhattan(p, x.coords()) <= r)
        out.centric.emplace_back(std::vector<Coord>(p.begin(), p.end()));
    });
  }
  std::sort(out.centric.begin(), out.centric.end());
  out.centric.erase(std::unique(out.centric.begin(), out.centric.end()), out.centric.end());

  if (r < static_cast<Coord>(n)) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    OrthantPiece piece;
    piece.signs.resize(n);
    std::vector<Coord> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      piece.signs[i] = ((mask >> (n - 1 - i)) & 1) ? 1 : -1;
      if (piece.signs[i] > 0) {
        lo[i] = x[i] + 1;
        hi[i] = box_hi[i];
      } else {
        lo[i] = box_lo[i];
        hi[i] = x[i] - 1;
      }
    }
    detail::for_each_in_box(lo, hi, [&](std::span<const Coord> p) {
      if (detail::manhattan(p, x.coords()) <= r)
        piece.points.emplace_back(std::vector<Coord>(p.begin(), p.end()));
    });
    piece.in_w = orthant_extents(g.dims(), x.coords(), piece.signs, piece.sub_extents);
    if (piece.in_w) {
      std::vector<Coord> sides(n);
      for (std::size_t i = 0; i < n; ++i) sides[i] = piece.sub_extents[i] + 1;
      piece.expected_size = eta_count(sides, r - static_cast<Coord>(n));
    } else {
      piece.sub_extents.clear();
      piece.expected_size = 0;
    }
    out.orthants.push_back(std::move(piece));
  }
  return out;
}

}  // namespace gridcodes
