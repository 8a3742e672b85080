#include "cubeband/oracle.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace cubeband {

namespace {

constexpr int kMaxVertices = 1 << kMaxOracleDim;
constexpr int kUnplaced = -1;

enum class Objective { min_bandwidth, max_antibandwidth };

// Depth-first search over numberings, choosing vertices for positions 1, 2, ...
// in ascending order, so leaves are visited in lexicographic order of the
// vertex sequence. A branch is cut as soon as it cannot strictly beat the best
// value found, which keeps the first optimum reached as the witness.
class Search {
 public:
  Search(int n, Objective objective)
      : n_(n), count_(1 << n), objective_(objective),
        best_(objective == Objective::min_bandwidth ? count_ : 0) {
    pos_.fill(kUnplaced);
  }

  OracleResult run() {
    extend(0, objective_ == Objective::min_bandwidth ? 0 : count_);
    std::vector<Vertex> order;
    for (int p = 0; p < count_; ++p) order.push_back(Vertex{static_cast<std::uint32_t>(witness_[p])});
    return OracleResult{static_cast<std::uint64_t>(best_),
                        Numbering::from_order(n_, std::move(order), NumberingKind::custom)};
  }

 private:
  bool is_edge(int a, int b) const {
    const int d = a ^ b;
    return d != 0 && (d & (d - 1)) == 0;
  }

  // `value` is the objective restricted to edges between placed vertices.
  void extend(int p, int value) {
    if (p == count_) {
      best_ = value;
      std::copy(seq_.begin(), seq_.begin() + count_, witness_.begin());
      return;
    }
    for (int v = 0; v < count_; ++v) {
      if (pos_[v] != kUnplaced) continue;
      std::optional<int> next = place(v, p, value);
      if (!next) continue;
      pos_[v] = p;
      seq_[p] = v;
      if (objective_ == Objective::max_antibandwidth || !doomed(p)) extend(p + 1, *next);
      pos_[v] = kUnplaced;
    }
  }

  // Objective after putting v at position p, or nullopt if that already loses.
  std::optional<int> place(int v, int p, int value) const {
    for (int axis = 0; axis < n_; ++axis) {
      const int q = pos_[v ^ (1 << axis)];
      if (q == kUnplaced) continue;
      const int gap = p - q;
      if (objective_ == Objective::min_bandwidth) {
        if (gap >= best_) return std::nullopt;
        value = std::max(value, gap);
      } else {
        if (gap <= best_) return std::nullopt;
        value = std::min(value, gap);
      }
    }
    return value;
  }

  // With positions 0..p filled, an unplaced neighbor of a vertex at q lands at
  // position p+1 or later, so its edge spans at least p+1-q.
  bool doomed(int p) const {
    for (int q = 0; q <= p; ++q) {
      if (p + 1 - q < best_) break;
      const int u = seq_[q];
      for (int axis = 0; axis < n_; ++axis) {
        if (pos_[u ^ (1 << axis)] == kUnplaced) return true;
      }
    }
    return false;
  }

  int n_;
  int count_;
  Objective objective_;
  int best_;
  std::array<int, kMaxVertices> pos_{};
  std::array<int, kMaxVertices> seq_{};
  std::array<int, kMaxVertices> witness_{};
};

}  // namespace

OracleResult brute_force_bandwidth(int n) {
  require_dim(n, kMaxOracleDim, "oracle dimension");
  return Search(n, Objective::min_bandwidth).run();
}

OracleResult brute_force_antibandwidth(int n) {
  require_dim(n, kMaxOracleDim, "oracle dimension");
  return Search(n, Objective::max_antibandwidth).run();
}

SparseBlock adjacency_from_definition(const Numbering& num) {
  const int n = num.dim();
  require_dim(n, kMaxFullMatrixDim, "full-matrix dimension");
  const std::uint64_t count = vertex_count(n);
  std::vector<Entry> nz;
  for (std::uint32_t u = 0; u < count; ++u) {
    for (std::uint32_t v = 0; v < count; ++v) {
      // Tuples are adjacent iff they differ in exactly one entry.
      int differing = 0;
      for (int i = 0; i < n; ++i) differing += ((u >> i) & 1u) != ((v >> i) & 1u);
      if (differing == 1) nz.push_back(Entry{num.rank(Vertex{u}), num.rank(Vertex{v})});
    }
  }
  return SparseBlock(count, count, std::move(nz));
}

}  // namespace cubeband
