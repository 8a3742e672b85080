#include "cubeband/layout.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace cubeband {

namespace {

// Below this dimension a single thread finishes in well under a second.
constexpr int kParallelDim = 22;

LayoutMetrics scan_range(std::span<const std::uint32_t> rank, int n, std::uint64_t first,
                         std::uint64_t last) {
  std::uint64_t hi = 0;
  std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t u = first; u < last; ++u) {
    const std::uint32_t ru = rank[u];
    for (int axis = 0; axis < n; ++axis) {
      const std::uint64_t bit = std::uint64_t{1} << axis;
      if (u & bit) continue;
      const std::uint32_t rv = rank[u | bit];
      const std::uint64_t gap = ru > rv ? ru - rv : rv - ru;
      hi = std::max(hi, gap);
      lo = std::min(lo, gap);
    }
  }
  return {hi, lo};
}

}  // namespace

LayoutMetrics evaluate(const Numbering& num) {
  const int n = num.dim();
  const auto rank = num.ranks();
  const std::uint64_t count = vertex_count(n);

  unsigned workers = 1;
  if (n >= kParallelDim) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1) return scan_range(rank, n, 0, count);

  // max and min are order-independent, so the partitioned scan returns the
  // same result as the sequential one.
  std::vector<LayoutMetrics> partial(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = std::min(count, w * chunk);
    const std::uint64_t last = std::min(count, first + chunk);
    pool.emplace_back([&, w, first, last] { partial[w] = scan_range(rank, n, first, last); });
  }
  for (auto& t : pool) t.join();

  LayoutMetrics out{0, std::numeric_limits<std::uint64_t>::max()};
  for (const auto& p : partial) {
    out.bandwidth = std::max(out.bandwidth, p.bandwidth);
    out.antibandwidth = std::min(out.antibandwidth, p.antibandwidth);
  }
  return out;
}

std::uint64_t bandwidth_of(const Numbering& num) { return evaluate(num).bandwidth; }

std::uint64_t antibandwidth_of(const Numbering& num) { return evaluate(num).antibandwidth; }

Numbering antiband_numbering(const LayerTable& table) {
  if (!table.well_formed()) throw Error("malformed layer table");
  std::vector<Vertex> order;
  order.reserve(vertex_count(table.n));
  for (int parity = 0; parity < 2; ++parity) {
    for (int k = parity; k <= table.n; k += 2) {
      const auto& layer = table.layers[static_cast<std::size_t>(k)];
      order.insert(order.end(), layer.begin(), layer.end());
    }
  }
  return Numbering::from_order(table.n, std::move(order), NumberingKind::antiband);
}

Numbering antiband_numbering(int n) {
  require_dim(n, kMaxEnumDim);
  return antiband_numbering(layer_table_recursive(n));
}

}  // namespace cubeband
