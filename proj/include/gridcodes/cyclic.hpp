#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gridcodes/count.hpp"
#include "gridcodes/grid.hpp"

namespace gridcodes {

/// Cyclic subgroup <g0> of C_{m_1} x ... x C_{m_n}, with g0 = prod g_i^{e_i}
/// written over the canonical generators g_i. Elements are exponent vectors.
struct CyclicCodeSpec {
  std::vector<Coord> orders;               // m_i >= 2
  std::vector<Coord> generator_exponents;  // 0 <= e_i < m_i, not all zero
};

/// Throws DomainError for mismatched lengths, m_i < 2, exponents out of range
/// or the trivial generator.
void validate(const CyclicCodeSpec& spec);

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

struct CyclicDerived {
  std::size_t n = 0;
  IndexSet support;                 // S = {i : e_i != 0}
  std::vector<Coord> gcd_part;      // l_i = gcd(e_i, m_i) for i in S, else 0
  std::vector<Coord> cofactor;      // c_i = e_i / l_i for i in S, else 0
  std::vector<Coord> hat_side;      // m_i / l_i for i in S, else 0
  Coord min_gcd = 0;                // l = min over S of l_i
  Count order;                      // lcm over S of m_i / l_i = |<g0>|
  std::vector<IndexSet> maximal_sets;     // X, always containing the empty set
  std::vector<IndexSet> complement_sets;  // Y = {J u ([n] - S) : J in X}
};

/// Largest |S| accepted; the maximal-set search visits every subset of S.
inline constexpr std::size_t kMaxSupport = 24;

CyclicDerived derive(const CyclicCodeSpec& spec);

/// lcm of m_j / l_j over j in J (J a subset of S); 1 for the empty set.
Count subset_order(const CyclicDerived& derived, const IndexSet& subset);

struct HammingExtent {
  Coord min = 0;  // d_H
  Coord max = 0;  // Delta_H
};

/// Minimum and maximum Hamming distance of the code, from the complement family.
HammingExtent min_hamming_distance(const CyclicCodeSpec& spec);
HammingExtent min_hamming_distance(const CyclicDerived& derived);

/// Exponent vector of g0^k.
Point codeword(const CyclicCodeSpec& spec, std::uint64_t k);
/// Coordinates of g0^k over the generators g_i^{l_i} of the subgroup G-hat,
/// k_i = c_i k mod (m_i / l_i) for i in S, 0 elsewhere.
std::vector<Coord> hat_coordinates(const CyclicDerived& derived, std::uint64_t k);

/// Manhattan distance between g0^{k1} and g0^{k2}: sum over the support of
/// gh^{-1} of l_i |k_{i1} - k_{i2}|. Throws DomainError when an exponent is
/// not below the code order.
Coord codeword_distance(const CyclicCodeSpec& spec, std::uint64_t k1, std::uint64_t k2);
Coord codeword_distance(const CyclicDerived& derived, std::uint64_t k1, std::uint64_t k2);

struct BoundChain {
  Coord l = 0;
  Coord d_hamming = 0;
  Coord hat_d_lee = 0;
  Coord hat_d = 0;
  Coord l_d_hamming = 0;     // l * d_H
  Coord l_hat_d_lee = 0;     // l * d-hat_L
  Coord d_lee = 0;           // d_L
  Coord l_hat_d = 0;         // l * d-hat
  Coord max_lee_hat = 0;     // max{d_L, l * d-hat}
  Coord d = 0;               // Manhattan minimum distance
  Coord delta = 0;           // Manhattan maximum distance
  Coord delta_upper = 0;     // sum over S of (m_i - l_i)

  /// Whether l d_H <= l d-hat_L <= max{d_L, l d-hat} <= d and delta <= delta_upper.
  bool holds() const;
};

struct CyclicScanLimits {
  std::uint64_t max_order = 1'000'000;         // identity scans
  std::uint64_t max_pairs = 200'000'000;       // pairwise scans
};

/// Exact chain of minimum distances. Minima of d_H, d_L and d-hat_L are taken
/// against the identity (these distances only depend on g h^{-1}); d-hat, d
/// and Delta need every pair. Throws DomainError for order 1 and BudgetError
/// beyond the scan limits.
BoundChain bound_chain(const CyclicCodeSpec& spec, const CyclicScanLimits& limits = {});

/// All codewords g0^0, ..., g0^{order-1} as exponent vectors.
std::vector<Point> cyclic_codewords(const CyclicCodeSpec& spec, std::uint64_t max_order = 1'000'000);

}  // namespace gridcodes
