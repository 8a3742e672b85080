#pragma once

/// \file cubeband/blocks.hpp
/// \brief Layer-pair adjacency blocks M_{k,k'} of the Hales-numbered cube.
///
/// Rows of block (k, k') are the weight-k vertices and columns the weight-k'
/// vertices, both in Hales order. Blocks are stored as sorted 1-based
/// coordinate lists; a full 2^n x 2^n matrix is only ever described by a
/// BlockLayout plus the edge stream.

#include <cstdint>
#include <vector>

#include "cubeband/hales.hpp"

namespace cubeband {

struct Entry {
  std::uint32_t row;  ///< 1-based
  std::uint32_t col;  ///< 1-based

  constexpr auto operator<=>(const Entry&) const = default;
};

/// A rows x cols 0/1 matrix given by its nonzero coordinates in row-major order.
class SparseBlock {
 public:
  /// Sorts `nz` and validates bounds and uniqueness.
  SparseBlock(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> nz);

  std::uint64_t rows() const noexcept { return rows_; }
  std::uint64_t cols() const noexcept { return cols_; }
  std::uint64_t nnz() const noexcept { return nz_.size(); }
  const std::vector<Entry>& entries() const noexcept { return nz_; }
  bool contains(std::uint32_t row, std::uint32_t col) const;

  SparseBlock transposed() const;

  bool operator==(const SparseBlock&) const = default;

 private:
  std::uint64_t rows_;
  std::uint64_t cols_;
  std::vector<Entry> nz_;
};

/// Block (k, k2) by testing hypercube adjacency of the layer vertices.
SparseBlock layer_adjacency(const LayerTable& table, int k, int k2);

/// M^(n)_{k,k+1} assembled from the four-way split into
/// [M^(n-1)_{k-1,k}, 0; I, M^(n-1)_{k,k+1}] with base case the 1 x n ones row.
/// No adjacency test is performed. Requires 0 <= k <= n-1.
SparseBlock upper_block_recursive(int n, int k);

/// M^(n)_{k,k-1} assembled from [M^(n-1)_{k-1,k-2}, I; 0, M^(n-1)_{k,k-1}]
/// with base case the n x 1 ones column. Requires 1 <= k <= n.
SparseBlock lower_block_recursive(int n, int k);

/// max(rows - i + j) over nonzeros (i, j): the Manhattan distance to the anchor
/// position (rows, 0). Throws Error for an all-zero block.
std::uint64_t manhattan_radius(const SparseBlock& b);

/// max |i - j| over nonzeros; 0 for an all-zero block.
std::uint64_t block_bandwidth(const SparseBlock& b);

/// Bandwidth of the adjacency matrix of Q^(n) under `num`, streamed over its
/// nonzeros (both triangles) without materializing it.
std::uint64_t matrix_bandwidth(const Numbering& num);

enum class LayerOrdering { standard, even_odd };

struct BlockLayout {
  int n = 0;
  LayerOrdering ordering = LayerOrdering::standard;
  std::vector<int> order;             ///< layer indices, top to bottom
  std::vector<std::uint64_t> offset;  ///< 0-based start of each layer, indexed by layer
  std::uint64_t total = 0;            ///< always 2^n
};

/// Prefix sums of C(n, k) in the chosen layer order.
BlockLayout block_offsets(int n, LayerOrdering ordering);

/// Minimum of |(R + i) - (C + j)| over nonzeros (i, j) of block (k, k2), where
/// R and C are the even/odd-layout offsets of layers k and k2. Requires
/// |k - k2| = 1 and n <= kMaxBlockDim.
std::uint64_t delta(int n, int k, int k2);
std::uint64_t delta(const LayerTable& table, int k, int k2);

/// Minimum of delta_{k,k-1} and delta_{k,k+1} over odd k: the antibandwidth of
/// the even/odd numbering read off the lower half of its adjacency matrix.
std::uint64_t combined_delta(const LayerTable& table);

}  // namespace cubeband
