#pragma once

/// \file cubeband/oracle.hpp
/// \brief Brute-force ground truth for tiny cubes.
///
/// Nothing here uses the layer table or the Hales order; these routines only
/// rely on the definition of adjacency, so they can check the fast paths.

#include <cstdint>

#include "cubeband/blocks.hpp"
#include "cubeband/hales.hpp"

namespace cubeband {

struct OracleResult {
  std::uint64_t value;
  Numbering witness;  ///< kind custom; first optimum in lexicographic order
};

/// Minimum bandwidth over all (2^n)! numberings. Requires n <= kMaxOracleDim.
OracleResult brute_force_bandwidth(int n);

/// Maximum antibandwidth over all (2^n)! numberings. Requires n <= kMaxOracleDim.
OracleResult brute_force_antibandwidth(int n);

/// The full 2^n x 2^n adjacency matrix under `num`, built by testing every
/// vertex pair. Requires n <= kMaxFullMatrixDim.
SparseBlock adjacency_from_definition(const Numbering& num);

}  // namespace cubeband
