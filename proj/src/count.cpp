#include "gridcodes/count.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace gridcodes {

namespace {

// Rows beyond this are computed multiplicatively instead of cached.
constexpr std::uint64_t kPascalRows = 2048;

class PascalTriangle {
 public:
  Count get(std::uint64_t n, std::uint64_t k) {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      std::vector<Count> row(m + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Count>> rows_;
};

PascalTriangle& triangle() {
  static PascalTriangle t;
  return t;
}

}  // namespace

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n < kPascalRows) return triangle().get(n, k);
  if (k > n - k) k = n - k;
  Count result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count floor_div(const Count& a, const Count& b) {
  Count q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Count ceil_div(const Count& a, const Count& b) {
  Count q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::string to_string(const Count& value) { return value.str(); }

}  // namespace gridcodes
