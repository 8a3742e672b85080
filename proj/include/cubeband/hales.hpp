#pragma once

/// \file cubeband/hales.hpp
/// \brief Numberings of Q^(n), the Hales order and its recursive layer table.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubeband/core.hpp"

namespace cubeband {

enum class NumberingKind { hales, antiband, custom };

std::string_view to_string(NumberingKind kind);
NumberingKind parse_numbering_kind(std::string_view text);

/// A numbering is a bijection between the 2^n vertices and {1, ..., 2^n}.
/// Both directions are stored.
class Numbering {
 public:
  /// Numbers `order[0]` as 1, `order[1]` as 2 and so on. Throws Error if
  /// `order` is not a permutation of the vertices of Q^(n).
  static Numbering from_order(int n, std::vector<Vertex> order, NumberingKind kind);

  int dim() const noexcept { return n_; }
  NumberingKind kind() const noexcept { return kind_; }
  std::uint64_t size() const noexcept { return order_.size(); }

  std::uint32_t rank(Vertex v) const { return rank_[v.bits]; }
  /// `number` is 1-based.
  Vertex vertex_at(std::uint32_t number) const { return order_[number - 1]; }

  /// Indexed by vertex bits.
  std::span<const std::uint32_t> ranks() const noexcept { return rank_; }
  /// Indexed by number - 1.
  std::span<const Vertex> order() const noexcept { return order_; }

  /// Same dimension and same rank for every vertex; `kind` is ignored.
  bool same_ranks(const Numbering& other) const noexcept {
    return n_ == other.n_ && rank_ == other.rank_;
  }

  /// eta'(v) = 2^n + 1 - eta(v), tagged custom.
  Numbering reversed() const;

 private:
  Numbering() = default;

  int n_ = 0;
  NumberingKind kind_ = NumberingKind::custom;
  std::vector<std::uint32_t> rank_;
  std::vector<Vertex> order_;
};

/// Hales order: lower weight first; within a weight, the larger encoding first.
std::strong_ordering cmp_hales(Vertex u, Vertex v) noexcept;

/// For each weight k = 0..n, the weight-k vertices in Hales order.
struct LayerTable {
  int n = 0;
  std::vector<std::vector<Vertex>> layers;

  /// Layer sizes are C(n, k), weights match and all 2^n vertices occur once.
  bool well_formed() const;
};

/// Builds layers dimension by dimension without sorting: layer k of Q^(n) is
/// layer k-1 of Q^(n-1) with c_n = 1 appended, followed by layer k of Q^(n-1)
/// with c_n = 0 appended.
LayerTable layer_table_recursive(int n);

/// Concatenates layers 0..n and numbers them 1..2^n.
Numbering numbering_from_table(const LayerTable& table);

enum class Construction { recursive, comparator_sort };

/// The Hales numbering H^(n). Both constructions give identical numberings;
/// `comparator_sort` sorts all vertices with cmp_hales.
Numbering hales_numbering(int n, Construction how = Construction::recursive);

}  // namespace cubeband
