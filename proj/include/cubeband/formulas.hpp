#pragma once

/// \file cubeband/formulas.hpp
/// \brief Exact closed forms for hypercube bandwidth, antibandwidth and block radii.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubeband {

/// Arbitrary-precision signed integer.
using ExactInt = boost::multiprecision::cpp_int;

/// C(n, k); 0 when k < 0 or k > n. Throws RangeError for n < 0.
ExactInt binomial(std::int64_t n, std::int64_t k);

/// sum_{m=0}^{count-1} C(m, floor(m/2)).
ExactInt central_binomial_sum(int count);

/// bw(Q^(n)) = sum_{m=0}^{n-1} C(m, floor(m/2)), 1 <= n <= 512.
ExactInt hypercube_bandwidth(int n);

/// f(Q^(n)) = 2^(n-1) - sum_{m=0}^{n-2} C(m, floor(m/2)), 1 <= n <= 512.
ExactInt hypercube_antibandwidth(int n);

/// r(M^(n)_{k,k+1}) from the recursion
///   r(n, k) = C(n-1, k) + max(r(n-1, k-1), r(n-1, k)),  1 <= k <= n-1,
/// where a term whose block has no columns (k = n-1) is dropped,
/// r(1, 0) = 1 and r(n, 0) = n (the 1 x n ones row).
ExactInt radius_up(int n, int k);

/// radius_up(n, k) for k = 0..n-1 in one pass.
std::vector<ExactInt> radius_up_row(int n);

/// r(M^(n)_{k,k-1}) = C(n-1, k) + C(n-1, k-2) + C(n-1, k-1), 1 <= k <= n.
ExactInt radius_down_closed(int n, int k);

}  // namespace cubeband
