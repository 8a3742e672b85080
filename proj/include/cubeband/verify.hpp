#pragma once

/// \file cubeband/verify.hpp
/// \brief Cross-checks between constructions, closed forms and oracles.
///
/// Each check runs for n = 1..n_max but is capped at its own scale:
///
///   check                         n range
///   bandwidth_formula             1..20
///   antibandwidth_formula         1..20
///   oracle_bandwidth              1..3
///   oracle_antibandwidth          1..3
///   hales_recursion_equivalence   1..12
///   layers_decreasing             1..12
///   upper_block_recursion         1..10
///   lower_block_recursion         1..10
///   block_transpose_symmetry      1..10
///   tridiagonal_zero_blocks       1..10
///   upper_identity_corner         2..10
///   radius_up_recursion           1..12
///   radius_down_closed            1..12
///   radius_decomposition          1..12
///   radius_max_at_half            1..12
///   delta_lower_constant          2..12
///   delta_upper_minimum           2..12
///   delta_combined                1..12
///   matrix_bandwidth_hales        1..8
///   matrix_bandwidth_antiband     1..8

#include <cstdint>
#include <string>
#include <vector>

namespace cubeband {

inline constexpr int kMaxVerifyDim = 20;
inline constexpr int kMaxStructuralDim = 12;
inline constexpr int kMaxBlockCheckDim = 10;
inline constexpr int kMaxMaterializeCheckDim = 8;

struct CheckRecord {
  std::string check;
  int n;
  std::uint64_t expected;
  std::uint64_t actual;
  bool pass;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  bool all_passed() const;
  /// JSON array of {check, n, expected, actual, pass} in that key order.
  std::string to_json() const;
};

/// Ordered by n, then by the check order above. Requires 1 <= n_max <= 20.
VerifyReport run_verify(int n_max);

}  // namespace cubeband
