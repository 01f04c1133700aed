#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gridcodes {

/// Exact, unbounded integer used for every ball size, volume and bound.
using Count = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k > n. Small arguments are served
/// from a Pascal triangle that grows on demand and is shared across threads.
Count binomial(std::uint64_t n, std::uint64_t k);

/// Ceiling and floor of a / b for positive b.
Count ceil_div(const Count& a, const Count& b);
Count floor_div(const Count& a, const Count& b);

std::string to_string(const Count& value);

}  // namespace gridcodes
