#include "cubeband/hales.hpp"

#include <algorithm>
#include <numeric>

namespace cubeband {

std::string_view to_string(NumberingKind kind) {
  switch (kind) {
    case NumberingKind::hales:
      return "hales";
    case NumberingKind::antiband:
      return "antiband";
    case NumberingKind::custom:
      return "custom";
  }
  return "custom";
}

NumberingKind parse_numbering_kind(std::string_view text) {
  if (text == "hales") return NumberingKind::hales;
  if (text == "antiband") return NumberingKind::antiband;
  if (text == "custom") return NumberingKind::custom;
  throw ParseError("unknown numbering kind '" + std::string(text) + "'");
}

Numbering Numbering::from_order(int n, std::vector<Vertex> order, NumberingKind kind) {
  require_dim(n, kMaxEnumDim);
  const std::uint64_t count = vertex_count(n);
  if (order.size() != count) {
    throw Error("numbering of Q^(" + std::to_string(n) + ") needs " + std::to_string(count) +
                " vertices, got " + std::to_string(order.size()));
  }
  Numbering num;
  num.n_ = n;
  num.kind_ = kind;
  num.rank_.assign(count, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v.bits >= count) {
      throw Error("number " + std::to_string(i + 1) + " is assigned to out-of-range vertex " +
                  std::to_string(v.bits));
    }
    if (num.rank_[v.bits] != 0) {
      throw Error("vertex " + format_vertex(v, n) + " is numbered twice (" +
                  std::to_string(num.rank_[v.bits]) + " and " + std::to_string(i + 1) + ")");
    }
    num.rank_[v.bits] = static_cast<std::uint32_t>(i + 1);
  }
  num.order_ = std::move(order);
  return num;
}

Numbering Numbering::reversed() const {
  std::vector<Vertex> rev(order_.rbegin(), order_.rend());
  return from_order(n_, std::move(rev), NumberingKind::custom);
}

std::strong_ordering cmp_hales(Vertex u, Vertex v) noexcept {
  if (const auto c = weight(u) <=> weight(v); c != 0) return c;
  return v.bits <=> u.bits;
}

bool LayerTable::well_formed() const {
  if (n < 1 || n > kMaxEnumDim) return false;
  if (layers.size() != static_cast<std::size_t>(n) + 1) return false;
  std::vector<bool> seen(vertex_count(n), false);
  for (int k = 0; k <= n; ++k) {
    const auto& layer = layers[static_cast<std::size_t>(k)];
    if (layer.size() != layer_size(n, k)) return false;
    for (const Vertex v : layer) {
      if (v.bits >= seen.size() || weight(v) != k || seen[v.bits]) return false;
      seen[v.bits] = true;
    }
  }
  return true;
}

LayerTable layer_table_recursive(int n) {
  require_dim(n, kMaxEnumDim);
  // Q^(1): A_0 = [0], A_1 = [1].
  std::vector<std::vector<Vertex>> layers{{Vertex{0}}, {Vertex{1}}};
  for (int m = 2; m <= n; ++m) {
    const std::uint32_t top = 1u << (m - 1);
    std::vector<std::vector<Vertex>> next(static_cast<std::size_t>(m) + 1);
    next[0] = {Vertex{0}};
    next[static_cast<std::size_t>(m)] = {Vertex{(1u << m) - 1}};
    for (int k = 1; k < m; ++k) {
      const auto& with_one = layers[static_cast<std::size_t>(k - 1)];
      const auto& with_zero = layers[static_cast<std::size_t>(k)];
      auto& out = next[static_cast<std::size_t>(k)];
      out.reserve(with_one.size() + with_zero.size());
      for (const Vertex v : with_one) out.push_back(Vertex{v.bits | top});
      out.insert(out.end(), with_zero.begin(), with_zero.end());
    }
    layers = std::move(next);
  }
  return LayerTable{n, std::move(layers)};
}

Numbering numbering_from_table(const LayerTable& table) {
  if (!table.well_formed()) throw Error("malformed layer table");
  std::vector<Vertex> order;
  order.reserve(vertex_count(table.n));
  for (const auto& layer : table.layers) order.insert(order.end(), layer.begin(), layer.end());
  return Numbering::from_order(table.n, std::move(order), NumberingKind::hales);
}

Numbering hales_numbering(int n, Construction how) {
  require_dim(n, kMaxEnumDim);
  if (how == Construction::recursive) return numbering_from_table(layer_table_recursive(n));
  std::vector<Vertex> order(vertex_count(n));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = Vertex{static_cast<std::uint32_t>(i)};
  std::sort(order.begin(), order.end(), [](Vertex a, Vertex b) { return cmp_hales(a, b) < 0; });
  return Numbering::from_order(n, std::move(order), NumberingKind::hales);
}

}  // namespace cubeband
