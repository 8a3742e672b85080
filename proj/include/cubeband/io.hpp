#pragma once

/// \file cubeband/io.hpp
/// \brief Numbering files and Matrix Market export.
///
/// Numbering file:
///
///     # cubeband numbering n=<n> kind=<kind>
///     <c_1...c_n>\t<number>        (2^n lines, ascending by number)
///
/// Matrix Market: `%%MatrixMarket matrix coordinate pattern general` for
/// blocks and `... pattern symmetric` (lower triangle only) for the full
/// adjacency matrix, followed by `rows cols nnz` and 1-based `i j` lines in
/// row-major order.

#include <iosfwd>

#include "cubeband/blocks.hpp"
#include "cubeband/hales.hpp"

namespace cubeband {

void write_numbering(std::ostream& out, const Numbering& num);

/// Throws ParseError naming the offending line for a bad header, malformed
/// line, truncated or overlong file, repeated vertex or repeated number.
/// Lines may appear in any order.
Numbering read_numbering(std::istream& in);

void write_matrix_market(std::ostream& out, const SparseBlock& block);

/// Lower triangle of the adjacency matrix of Q^(n) under `num`.
/// Requires n <= kMaxFullMatrixDim.
void write_full_matrix_market(std::ostream& out, const Numbering& num);

}  // namespace cubeband
