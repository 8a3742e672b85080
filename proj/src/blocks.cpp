#include "cubeband/blocks.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cubeband {

SparseBlock::SparseBlock(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> nz)
    : rows_(rows), cols_(cols), nz_(std::move(nz)) {
  if (rows_ == 0 || cols_ == 0) throw Error("block dimensions must be positive");
  std::sort(nz_.begin(), nz_.end());
  for (std::size_t i = 0; i < nz_.size(); ++i) {
    const Entry e = nz_[i];
    if (e.row < 1 || e.row > rows_ || e.col < 1 || e.col > cols_) {
      throw Error("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                  ") outside " + std::to_string(rows_) + " x " + std::to_string(cols_) + " block");
    }
    if (i > 0 && nz_[i - 1] == e) {
      throw Error("duplicate entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) + ")");
    }
  }
}

bool SparseBlock::contains(std::uint32_t row, std::uint32_t col) const {
  return std::binary_search(nz_.begin(), nz_.end(), Entry{row, col});
}

SparseBlock SparseBlock::transposed() const {
  std::vector<Entry> t;
  t.reserve(nz_.size());
  for (const Entry e : nz_) t.push_back(Entry{e.col, e.row});
  return SparseBlock(cols_, rows_, std::move(t));
}

namespace {

void require_layer(int n, int k, const char* what) {
  if (k < 0 || k > n) {
    throw RangeError(std::string(what) + " " + std::to_string(k) + " outside 0.." +
                     std::to_string(n));
  }
}

std::uint32_t u32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }

// Appends M^(n)_{k,k+1}, shifted by (row0, col0), to `out`.
void emit_upper(int n, int k, std::uint64_t row0, std::uint64_t col0, std::vector<Entry>& out) {
  if (k == 0) {
    for (int j = 1; j <= n; ++j) out.push_back(Entry{u32(row0 + 1), u32(col0 + j)});
    return;
  }
  const std::uint64_t top = layer_size(n - 1, k - 1);  // rows of M^(n-1)_{k-1,k}
  const std::uint64_t ident = layer_size(n - 1, k);    // I_{C(n-1,k)} and cols of that block
  emit_upper(n - 1, k - 1, row0, col0, out);
  for (std::uint64_t i = 1; i <= ident; ++i) out.push_back(Entry{u32(row0 + top + i), u32(col0 + i)});
  // M^(n-1)_{k,k+1} has no columns when k = n-1.
  if (k <= n - 2) emit_upper(n - 1, k, row0 + top, col0 + ident, out);
}

// Appends M^(n)_{k,k-1}, shifted by (row0, col0), to `out`.
void emit_lower(int n, int k, std::uint64_t row0, std::uint64_t col0, std::vector<Entry>& out) {
  if (k == 1) {
    for (int i = 1; i <= n; ++i) out.push_back(Entry{u32(row0 + i), u32(col0 + 1)});
    return;
  }
  const std::uint64_t ident = layer_size(n - 1, k - 1);  // rows of M^(n-1)_{k-1,k-2}
  const std::uint64_t left = layer_size(n - 1, k - 2);   // its columns
  emit_lower(n - 1, k - 1, row0, col0, out);
  for (std::uint64_t i = 1; i <= ident; ++i) out.push_back(Entry{u32(row0 + i), u32(col0 + left + i)});
  // M^(n-1)_{k,k-1} has no rows when k = n.
  if (k <= n - 1) emit_lower(n - 1, k, row0 + ident, col0 + left, out);
}

}  // namespace

SparseBlock layer_adjacency(const LayerTable& table, int k, int k2) {
  const int n = table.n;
  if (!table.well_formed()) throw Error("malformed layer table");
  require_layer(n, k, "layer");
  require_layer(n, k2, "layer");
  const auto& rows = table.layers[static_cast<std::size_t>(k)];
  const auto& cols = table.layers[static_cast<std::size_t>(k2)];

  std::vector<Entry> nz;
  if (k - k2 == 1 || k2 - k == 1) {
    // Column position of each weight-k2 vertex, 1-based.
    std::vector<std::uint32_t> col_of(vertex_count(n), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j].bits] = u32(j + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const Vertex v : neighbors(rows[i], n)) {
        if (weight(v) == k2) nz.push_back(Entry{u32(i + 1), col_of[v.bits]});
      }
    }
  }
  return SparseBlock(rows.size(), cols.size(), std::move(nz));
}

SparseBlock upper_block_recursive(int n, int k) {
  require_dim(n, kMaxEnumDim);
  if (k < 0 || k > n - 1) {
    throw RangeError("upper block index k=" + std::to_string(k) + " outside 0.." +
                     std::to_string(n - 1));
  }
  std::vector<Entry> nz;
  nz.reserve(layer_size(n, k + 1) * static_cast<std::uint64_t>(k + 1));
  emit_upper(n, k, 0, 0, nz);
  return SparseBlock(layer_size(n, k), layer_size(n, k + 1), std::move(nz));
}

SparseBlock lower_block_recursive(int n, int k) {
  require_dim(n, kMaxEnumDim);
  if (k < 1 || k > n) {
    throw RangeError("lower block index k=" + std::to_string(k) + " outside 1.." +
                     std::to_string(n));
  }
  std::vector<Entry> nz;
  nz.reserve(layer_size(n, k) * static_cast<std::uint64_t>(k));
  emit_lower(n, k, 0, 0, nz);
  return SparseBlock(layer_size(n, k), layer_size(n, k - 1), std::move(nz));
}

std::uint64_t manhattan_radius(const SparseBlock& b) {
  if (b.nnz() == 0) throw Error("Manhattan radius of an all-zero block is undefined");
  std::uint64_t r = 0;
  for (const Entry e : b.entries()) r = std::max(r, b.rows() - e.row + e.col);
  return r;
}

std::uint64_t block_bandwidth(const SparseBlock& b) {
  std::uint64_t w = 0;
  for (const Entry e : b.entries()) w = std::max<std::uint64_t>(w, e.row > e.col ? e.row - e.col : e.col - e.row);
  return w;
}

std::uint64_t matrix_bandwidth(const Numbering& num) {
  const auto rank = num.ranks();
  std::uint64_t w = 0;
  const std::uint64_t count = vertex_count(num.dim());
  for (std::uint64_t u = 0; u < count; ++u) {
    const std::uint64_t i = rank[u];
    for (const Vertex v : neighbors(Vertex{u32(u)}, num.dim())) {
      const std::uint64_t j = rank[v.bits];
      w = std::max(w, i > j ? i - j : j - i);
    }
  }
  return w;
}

BlockLayout block_offsets(int n, LayerOrdering ordering) {
  require_dim(n, kMaxEnumDim);
  BlockLayout layout;
  layout.n = n;
  layout.ordering = ordering;
  if (ordering == LayerOrdering::standard) {
    for (int k = 0; k <= n; ++k) layout.order.push_back(k);
  } else {
    for (int k = 0; k <= n; k += 2) layout.order.push_back(k);
    for (int k = 1; k <= n; k += 2) layout.order.push_back(k);
  }
  layout.offset.assign(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t at = 0;
  for (const int k : layout.order) {
    layout.offset[static_cast<std::size_t>(k)] = at;
    at += layer_size(n, k);
  }
  layout.total = at;
  return layout;
}

std::uint64_t delta(const LayerTable& table, int k, int k2) {
  const int n = table.n;
  require_dim(n, kMaxBlockDim);
  require_layer(n, k, "layer");
  require_layer(n, k2, "layer");
  if (k - k2 != 1 && k2 - k != 1) {
    throw RangeError("delta needs adjacent layers, got " + std::to_string(k) + " and " +
                     std::to_string(k2));
  }
  const BlockLayout layout = block_offsets(n, LayerOrdering::even_odd);
  const std::uint64_t r0 = layout.offset[static_cast<std::size_t>(k)];
  const std::uint64_t c0 = layout.offset[static_cast<std::size_t>(k2)];
  const SparseBlock b = layer_adjacency(table, k, k2);
  if (b.nnz() == 0) throw Error("delta of an all-zero block is undefined");
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const Entry e : b.entries()) {
    const std::uint64_t i = r0 + e.row;
    const std::uint64_t j = c0 + e.col;
    best = std::min(best, i > j ? i - j : j - i);
  }
  return best;
}

std::uint64_t delta(int n, int k, int k2) {
  require_dim(n, kMaxBlockDim);
  return delta(layer_table_recursive(n), k, k2);
}

std::uint64_t combined_delta(const LayerTable& table) {
  const int n = table.n;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (int k = 1; k <= n; k += 2) {
    best = std::min(best, delta(table, k, k - 1));
    if (k + 1 <= n) best = std::min(best, delta(table, k, k + 1));
  }
  return best;
}

}  // namespace cubeband
