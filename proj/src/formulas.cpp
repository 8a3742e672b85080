#include "cubeband/formulas.hpp"

#include <algorithm>
#include <string>

#include "cubeband/core.hpp"

namespace cubeband {

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw RangeError("binomial: n must be nonnegative, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt c = 1;
  // Each prefix product C(n-k+i, i) is an integer, so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

ExactInt central_binomial_sum(int count) {
  ExactInt sum = 0;
  for (int m = 0; m < count; ++m) sum += binomial(m, m / 2);
  return sum;
}

ExactInt hypercube_bandwidth(int n) {
  require_dim(n, kMaxFormulaDim);
  return central_binomial_sum(n);
}

ExactInt hypercube_antibandwidth(int n) {
  require_dim(n, kMaxFormulaDim);
  return (ExactInt{1} << (n - 1)) - central_binomial_sum(n - 1);
}

std::vector<ExactInt> radius_up_row(int n) {
  require_dim(n, kMaxFormulaDim);
  std::vector<ExactInt> row{1};  // m = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<ExactInt> next(static_cast<std::size_t>(m));
    next[0] = m;
    ExactInt c = 1;  // C(m-1, k), updated incrementally
    for (int k = 1; k <= m - 1; ++k) {
      c = c * (m - k) / k;
      const ExactInt& left = row[static_cast<std::size_t>(k - 1)];
      const ExactInt best = k <= m - 2 ? std::max(left, row[static_cast<std::size_t>(k)]) : left;
      next[static_cast<std::size_t>(k)] = c + best;
    }
    row = std::move(next);
  }
  return row;
}

ExactInt radius_up(int n, int k) {
  require_dim(n, kMaxFormulaDim);
  if (k < 0 || k > n - 1) {
    throw RangeError("radius_up: k=" + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  }
  return radius_up_row(n)[static_cast<std::size_t>(k)];
}

ExactInt radius_down_closed(int n, int k) {
  require_dim(n, kMaxFormulaDim);
  if (k < 1 || k > n) {
    throw RangeError("radius_down_closed: k=" + std::to_string(k) + " outside 1.." +
                     std::to_string(n));
  }
  return binomial(n - 1, k) + binomial(n - 1, k - 2) + binomial(n - 1, k - 1);
}

}  // namespace cubeband
