#pragma once

/// \file cubeband/core.hpp
/// \brief Hypercube primitives: vertices, Hamming weight, neighbors, edges.
///
/// A vertex of the n-cube is an n-tuple (c_1, ..., c_n) of bits. Coordinate
/// c_i is stored at bit position i-1, so the leftmost coordinate is the least
/// significant bit. Under this encoding, comparing two tuples
/// lexicographically while reading coordinates right-to-left is the same as
/// comparing their integer encodings.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubeband {

/// Largest dimension for anything that enumerates vertices or edges.
inline constexpr int kMaxEnumDim = 28;
/// Largest dimension accepted by the closed-form formulas.
inline constexpr int kMaxFormulaDim = 512;
/// Largest dimension for delta computations and single-block export.
inline constexpr int kMaxBlockDim = 20;
/// Largest dimension for materializing the full 2^n x 2^n adjacency matrix.
inline constexpr int kMaxFullMatrixDim = 10;
/// Largest dimension for exhaustive permutation search.
inline constexpr int kMaxOracleDim = 3;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension, layer index or block index outside its permitted range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Throws RangeError unless 1 <= n <= max_n.
void require_dim(int n, int max_n, std::string_view what = "dimension");

struct Vertex {
  std::uint32_t bits = 0;

  constexpr auto operator<=>(const Vertex&) const = default;
};

struct Edge {
  Vertex u;  ///< u.bits < v.bits
  Vertex v;
  int axis;  ///< 0-based index of the flipped coordinate

  constexpr bool operator==(const Edge&) const = default;
};

inline constexpr std::uint64_t vertex_count(int n) { return std::uint64_t{1} << n; }
inline constexpr std::uint64_t edge_count(int n) {
  return n == 0 ? 0 : static_cast<std::uint64_t>(n) << (n - 1);
}

inline int weight(Vertex v) noexcept { return __builtin_popcount(v.bits); }

inline bool adjacent(Vertex u, Vertex v) noexcept {
  const std::uint32_t d = u.bits ^ v.bits;
  return d != 0 && (d & (d - 1)) == 0;
}

/// The n neighbors of `v`, ordered by flipped coordinate c_1, c_2, ..., c_n.
std::vector<Vertex> neighbors(Vertex v, int n);

/// Parses "c_1 c_2 ... c_n" (exactly n characters of '0' / '1').
Vertex parse_vertex(std::string_view text, int n);
std::string format_vertex(Vertex v, int n);

/// C(n, k) for 0 <= n <= 64 in 64-bit arithmetic; 0 outside 0 <= k <= n.
std::uint64_t layer_size(int n, int k);

/// Forward range over the edges of Q^(n), ascending by u.bits then by axis.
class EdgeRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Edge;
    using difference_type = std::ptrdiff_t;
    using pointer = const Edge*;
    using reference = Edge;

    iterator() = default;
    Edge operator*() const {
      const auto u = static_cast<std::uint32_t>(u_);
      return Edge{Vertex{u}, Vertex{u | (1u << axis_)}, axis_};
    }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& o) const { return u_ == o.u_ && axis_ == o.axis_; }

   private:
    friend class EdgeRange;
    iterator(int n, std::uint64_t u, int axis) : n_(n), u_(u), axis_(axis) {}
    void settle();

    int n_ = 0;
    std::uint64_t u_ = 0;
    int axis_ = 0;
  };

  explicit EdgeRange(int n);
  iterator begin() const;
  iterator end() const;
  std::uint64_t size() const { return edge_count(n_); }

 private:
  int n_;
};

/// All edges of Q^(n) as a lazily evaluated range. Requires n <= kMaxEnumDim.
EdgeRange edges(int n);

/// Calls `fn(u, v)` for every edge with u < v, in the same order as edges(n).
template <class Fn>
void for_each_edge(int n, Fn&& fn) {
  const std::uint64_t count = vertex_count(n);
  for (std::uint64_t u = 0; u < count; ++u) {
    for (int axis = 0; axis < n; ++axis) {
      const std::uint32_t bit = 1u << axis;
      if ((u & bit) == 0) fn(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u) | bit);
    }
  }
}

}  // namespace cubeband
