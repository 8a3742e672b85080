#include "cubeband/core.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

namespace cubeband {
namespace {

Vertex v(std::string_view s) { return parse_vertex(s, static_cast<int>(s.size())); }

TEST(Weight, CountsOnes) {
  EXPECT_EQ(weight(v("000")), 0);
  EXPECT_EQ(weight(v("111")), 3);
  EXPECT_EQ(weight(v("101")), 2);
}

TEST(Neighbors, FlipCoordinatesInOrder) {
  EXPECT_EQ(neighbors(v("00"), 2), (std::vector<Vertex>{v("10"), v("01")}));
  EXPECT_EQ(neighbors(v("111"), 3), (std::vector<Vertex>{v("011"), v("101"), v("110")}));
  EXPECT_EQ(neighbors(Vertex{0}, 1), (std::vector<Vertex>{Vertex{1}}));
}

TEST(Neighbors, RejectsBadInput) {
  EXPECT_THROW(neighbors(Vertex{4}, 2), RangeError);
  EXPECT_THROW(neighbors(Vertex{0}, 0), RangeError);
}

TEST(Neighbors, RelationIsSymmetric) {
  const int n = 7;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    for (const Vertex b : neighbors(Vertex{a}, n)) {
      const auto back = neighbors(b, n);
      EXPECT_NE(std::find(back.begin(), back.end(), Vertex{a}), back.end());
    }
  }
}

TEST(Vertex, LeftmostCoordinateIsLowBit) {
  EXPECT_EQ(parse_vertex("01", 2).bits, 2u);
  EXPECT_EQ(parse_vertex("10", 2).bits, 1u);
  EXPECT_EQ(format_vertex(parse_vertex("110", 3), 3), "110");
}

TEST(Vertex, ParseErrors) {
  EXPECT_THROW(parse_vertex("01x", 3), ParseError);
  EXPECT_THROW(parse_vertex("01", 3), ParseError);
  EXPECT_THROW(parse_vertex("0101", 3), ParseError);
}

TEST(Vertex, RoundTripsAllStrings) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      const std::string s = format_vertex(Vertex{bits}, n);
      ASSERT_EQ(parse_vertex(s, n).bits, bits);
      ASSERT_EQ(format_vertex(parse_vertex(s, n), n), s);
    }
  }
}

TEST(Edges, SmallCounts) {
  const auto e1 = edges(1);
  std::vector<Edge> list(e1.begin(), e1.end());
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0].u.bits, 0u);
  EXPECT_EQ(list[0].v.bits, 1u);
  EXPECT_EQ(std::distance(edges(2).begin(), edges(2).end()), 4);
  EXPECT_EQ(std::distance(edges(3).begin(), edges(3).end()), 12);
}

TEST(Edges, ExhaustiveUpTo12) {
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t count = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    Edge prev{};
    for (const Edge e : edges(n)) {
      ASSERT_LT(e.u.bits, e.v.bits);
      ASSERT_EQ(__builtin_popcount(e.u.bits ^ e.v.bits), 1);
      ASSERT_EQ(e.u.bits ^ e.v.bits, 1u << e.axis);
      if (count > 0) {
        ASSERT_TRUE(prev.u.bits < e.u.bits || (prev.u.bits == e.u.bits && prev.axis < e.axis));
      }
      ASSERT_TRUE(seen.emplace(e.u.bits, e.v.bits).second);
      prev = e;
      ++count;
    }
    EXPECT_EQ(count, static_cast<std::uint64_t>(n) << (n - 1));
    EXPECT_EQ(count, edges(n).size());
  }
}

TEST(Edges, ForEachMatchesRange) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> a, b;
  for (const Edge e : edges(6)) a.emplace_back(e.u.bits, e.v.bits);
  for_each_edge(6, [&](std::uint32_t u, std::uint32_t w) { b.emplace_back(u, w); });
  EXPECT_EQ(a, b);
}

TEST(Edges, DimensionGuard) {
  EXPECT_THROW(edges(0), RangeError);
  EXPECT_THROW(edges(kMaxEnumDim + 1), RangeError);
}

TEST(LayerSize, Pascal) {
  EXPECT_EQ(layer_size(4, 2), 6u);
  EXPECT_EQ(layer_size(20, 10), 184756u);
  EXPECT_EQ(layer_size(3, -1), 0u);
  EXPECT_EQ(layer_size(3, 4), 0u);
}

}  // namespace
}  // namespace cubeband
