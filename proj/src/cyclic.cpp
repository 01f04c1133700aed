#include "gridcodes/cyclic.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>

#include "gridcodes/errors.hpp"

namespace gridcodes {

void validate(const CyclicCodeSpec& spec) {
  const std::size_t n = spec.orders.size();
  if (n == 0) throw DomainError("cyclic code needs at least one factor");
  if (spec.generator_exponents.size() != n)
    throw DomainError("orders and generator exponents differ in length (" + std::to_string(n) +
                      " vs " + std::to_string(spec.generator_exponents.size()) + ")");
  bool nontrivial = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.orders[i] < 2)
      throw DomainError("order m_" + std::to_string(i + 1) + " = " +
                        std::to_string(spec.orders[i]) + " must be at least 2");
    const Coord e = spec.generator_exponents[i];
    if (e < 0 || e >= spec.orders[i])
      throw DomainError("exponent e_" + std::to_string(i + 1) + " = " + std::to_string(e) +
                        " outside [0," + std::to_string(spec.orders[i] - 1) + "]");
    nontrivial = nontrivial || e != 0;
  }
  if (!nontrivial) throw DomainError("trivial generator: every exponent is zero");
}

namespace {

// lcm of the hat sides selected by `mask` over the support positions; empty
// optional on 64-bit overflow.
std::optional<std::uint64_t> lcm_u64(const std::vector<std::uint64_t>& sides, std::uint64_t mask) {
  std::uint64_t acc = 1;
  for (std::size_t p = 0; p < sides.size(); ++p) {
    if (!((mask >> p) & 1)) continue;
    const std::uint64_t g = std::gcd(acc, sides[p]);
    const std::uint64_t factor = sides[p] / g;
    if (acc > std::numeric_limits<std::uint64_t>::max() / factor) return std::nullopt;
    acc *= factor;
  }
  return acc;
}

Count lcm_count(const std::vector<std::uint64_t>& sides, std::uint64_t mask) {
  Count acc = 1;
  for (std::size_t p = 0; p < sides.size(); ++p) {
    if (!((mask >> p) & 1)) continue;
    const Count side = sides[p];
    acc = acc / boost::multiprecision::gcd(acc, side) * side;
  }
  return acc;
}

std::uint64_t order_u64(const CyclicDerived& derived, std::uint64_t limit, std::string_view what) {
  if (derived.order > limit)
    throw BudgetError(std::string(what) + ": code order " + derived.order.str() +
                      " exceeds the scan limit " + std::to_string(limit));
  return static_cast<std::uint64_t>(derived.order);
}

Coord mul_mod(Coord a, std::uint64_t k, Coord m) {
  return static_cast<Coord>((static_cast<unsigned __int128>(a) * k) % static_cast<std::uint64_t>(m));
}

}  // namespace

CyclicDerived derive(const CyclicCodeSpec& spec) {
  validate(spec);
  CyclicDerived d;
  d.n = spec.orders.size();
  d.gcd_part.assign(d.n, 0);
  d.cofactor.assign(d.n, 0);
  d.hat_side.assign(d.n, 0);
  for (std::size_t i = 0; i < d.n; ++i) {
    const Coord e = spec.generator_exponents[i];
    if (e == 0) continue;
    d.support.push_back(i);
    d.gcd_part[i] = std::gcd(e, spec.orders[i]);
    d.cofactor[i] = e / d.gcd_part[i];
    d.hat_side[i] = spec.orders[i] / d.gcd_part[i];
  }
  if (d.support.size() > kMaxSupport)
    throw BudgetError("support of size " + std::to_string(d.support.size()) +
                      " exceeds the limit of " + std::to_string(kMaxSupport));
  d.min_gcd = d.gcd_part[d.support.front()];
  for (std::size_t i : d.support) d.min_gcd = std::min(d.min_gcd, d.gcd_part[i]);

  std::vector<std::uint64_t> sides;
  for (std::size_t i : d.support) sides.push_back(static_cast<std::uint64_t>(d.hat_side[i]));
  const std::size_t s = sides.size();
  const std::uint64_t full = (std::uint64_t{1} << s) - 1;
  const auto order_small = lcm_u64(sides, full);
  d.order = order_small ? Count(*order_small) : lcm_count(sides, full);

  // X: the empty set plus every non-empty J ⊊ S with O_J < O_S that no
  // further index of S can join without changing O_J.
  d.maximal_sets.push_back({});
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    bool maximal = true;
    if (order_small) {
      const std::uint64_t o = *lcm_u64(sides, mask);
      if (o >= *order_small) continue;
      for (std::size_t p = 0; p < s && maximal; ++p)
        if (!((mask >> p) & 1) && o % sides[p] == 0) maximal = false;
    } else {
      const Count o = lcm_count(sides, mask);
      if (o >= d.order) continue;
      for (std::size_t p = 0; p < s && maximal; ++p)
        if (!((mask >> p) & 1) && o % sides[p] == 0) maximal = false;
    }
    if (!maximal) continue;
    IndexSet subset;
    for (std::size_t p = 0; p < s; ++p)
      if ((mask >> p) & 1) subset.push_back(d.support[p]);
    d.maximal_sets.push_back(std::move(subset));
  }

  IndexSet outside;
  for (std::size_t i = 0; i < d.n; ++i)
    if (spec.generator_exponents[i] == 0) outside.push_back(i);
  for (const auto& subset : d.maximal_sets) {
    IndexSet y = subset;
    y.insert(y.end(), outside.begin(), outside.end());
    std::sort(y.begin(), y.end());
    d.complement_sets.push_back(std::move(y));
  }
  return d;
}

Count subset_order(const CyclicDerived& derived, const IndexSet& subset) {
  Count acc = 1;
  for (std::size_t i : subset) {
    if (i >= derived.n || derived.hat_side[i] == 0)
      throw DomainError("index " + std::to_string(i + 1) + " is not in the support");
    const Count side = derived.hat_side[i];
    acc = acc / boost::multiprecision::gcd(acc, side) * side;
  }
  return acc;
}

HammingExtent min_hamming_distance(const CyclicDerived& derived) {
  std::size_t largest = 0, smallest = derived.n;
  for (const auto& y : derived.complement_sets) {
    largest = std::max(largest, y.size());
    smallest = std::min(smallest, y.size());
  }
  return {static_cast<Coord>(derived.n - largest), static_cast<Coord>(derived.n - smallest)};
}

HammingExtent min_hamming_distance(const CyclicCodeSpec& spec) {
  return min_hamming_distance(derive(spec));
}

Point codeword(const CyclicCodeSpec& spec, std::uint64_t k) {
  validate(spec);
  std::vector<Coord> c(spec.orders.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = mul_mod(spec.generator_exponents[i], k, spec.orders[i]);
  return Point(std::move(c));
}

std::vector<Coord> hat_coordinates(const CyclicDerived& derived, std::uint64_t k) {
  std::vector<Coord> c(derived.n, 0);
  for (std::size_t i : derived.support) c[i] = mul_mod(derived.cofactor[i], k, derived.hat_side[i]);
  return c;
}

Coord codeword_distance(const CyclicDerived& derived, std::uint64_t k1, std::uint64_t k2) {
  if (derived.order <= k1 || derived.order <= k2)
    throw DomainError("exponent must be below the code order " + derived.order.str());
  Coord d = 0;
  for (std::size_t i : derived.support) {
    const Coord a = mul_mod(derived.cofactor[i], k1, derived.hat_side[i]);
    const Coord b = mul_mod(derived.cofactor[i], k2, derived.hat_side[i]);
    d += derived.gcd_part[i] * std::abs(a - b);
  }
  return d;
}

Coord codeword_distance(const CyclicCodeSpec& spec, std::uint64_t k1, std::uint64_t k2) {
  return codeword_distance(derive(spec), k1, k2);
}

bool BoundChain::holds() const {
  return l_d_hamming <= l_hat_d_lee && l_hat_d_lee <= max_lee_hat && max_lee_hat <= d &&
         delta <= delta_upper;
}

BoundChain bound_chain(const CyclicCodeSpec& spec, const CyclicScanLimits& limits) {
  const CyclicDerived derived = derive(spec);
  if (derived.order < 2) throw DomainError("distances need at least two codewords");
  const std::uint64_t order = order_u64(derived, limits.max_order, "bound chain");
  const Count pairs = Count(order) * (order - 1) / 2;
  if (pairs > limits.max_pairs)
    throw BudgetError("bound chain: " + pairs.str() + " codeword pairs exceed the limit " +
                      std::to_string(limits.max_pairs));

  const std::size_t s = derived.support.size();
  std::vector<Coord> m(s), l(s), hat(s);
  for (std::size_t p = 0; p < s; ++p) {
    const std::size_t i = derived.support[p];
    m[p] = spec.orders[i];
    l[p] = derived.gcd_part[i];
    hat[p] = derived.hat_side[i];
  }
  // Hat coordinates of every codeword over the support; the grid coordinate
  // is l_i times the hat coordinate.
  std::vector<Coord> k(order * s);
  for (std::uint64_t j = 0; j < order; ++j)
    for (std::size_t p = 0; p < s; ++p)
      k[j * s + p] = mul_mod(derived.cofactor[derived.support[p]], j, hat[p]);

  constexpr Coord kInf = std::numeric_limits<Coord>::max();
  BoundChain c;
  c.l = derived.min_gcd;
  c.d_hamming = kInf;
  c.hat_d_lee = kInf;
  c.d_lee = kInf;
  for (std::uint64_t j = 1; j < order; ++j) {
    Coord dh = 0, dl = 0, hdl = 0;
    for (std::size_t p = 0; p < s; ++p) {
      const Coord v = k[j * s + p];
      if (v == 0) continue;
      ++dh;
      hdl += std::min(v, hat[p] - v);
      dl += std::min(l[p] * v, m[p] - l[p] * v);
    }
    c.d_hamming = std::min(c.d_hamming, dh);
    c.hat_d_lee = std::min(c.hat_d_lee, hdl);
    c.d_lee = std::min(c.d_lee, dl);
  }
  c.hat_d = kInf;
  c.d = kInf;
  c.delta = 0;
  for (std::uint64_t a = 0; a < order; ++a) {
    const Coord* ka = &k[a * s];
    for (std::uint64_t b = a + 1; b < order; ++b) {
      const Coord* kb = &k[b * s];
      Coord hd = 0, dd = 0;
      for (std::size_t p = 0; p < s; ++p) {
        const Coord diff = std::abs(ka[p] - kb[p]);
        hd += diff;
        dd += l[p] * diff;
      }
      c.hat_d = std::min(c.hat_d, hd);
      c.d = std::min(c.d, dd);
      c.delta = std::max(c.delta, dd);
    }
  }
  c.l_d_hamming = c.l * c.d_hamming;
  c.l_hat_d_lee = c.l * c.hat_d_lee;
  c.l_hat_d = c.l * c.hat_d;
  c.max_lee_hat = std::max(c.d_lee, c.l_hat_d);
  c.delta_upper = 0;
  for (std::size_t p = 0; p < s; ++p) c.delta_upper += m[p] - l[p];
  return c;
}

std::vector<Point> cyclic_codewords(const CyclicCodeSpec& spec, std::uint64_t max_order) {
  const CyclicDerived derived = derive(spec);
  const std::uint64_t order = order_u64(derived, max_order, "codeword listing");
  std::vector<Point> out;
  out.reserve(order);
  for (std::uint64_t j = 0; j < order; ++j) out.push_back(codeword(spec, j));
  return out;
}

}  // namespace gridcodes
