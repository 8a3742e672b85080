#include "cubeband/oracle.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "cubeband/layout.hpp"

namespace cubeband {
namespace {

// Plain enumeration of every permutation, no pruning. Returns {min bw, max abw}.
std::pair<std::uint64_t, std::uint64_t> enumerate_all(int n) {
  std::vector<std::uint32_t> perm(vertex_count(n));
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t best_bw = UINT64_MAX, best_abw = 0;
  do {
    std::vector<Vertex> order;
    for (auto b : perm) order.push_back(Vertex{b});
    const auto m = evaluate(Numbering::from_order(n, order, NumberingKind::custom));
    best_bw = std::min(best_bw, m.bandwidth);
    best_abw = std::max(best_abw, m.antibandwidth);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best_bw, best_abw};
}

TEST(Oracle, BandwidthValues) {
  EXPECT_EQ(brute_force_bandwidth(1).value, 1u);
  EXPECT_EQ(brute_force_bandwidth(2).value, 2u);
  EXPECT_EQ(brute_force_bandwidth(3).value, 4u);
}

TEST(Oracle, AntibandwidthValues) {
  EXPECT_EQ(brute_force_antibandwidth(1).value, 1u);
  EXPECT_EQ(brute_force_antibandwidth(2).value, 1u);
  EXPECT_EQ(brute_force_antibandwidth(3).value, 2u);
}

TEST(Oracle, PrunedSearchMatchesFullEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    const auto [bw, abw] = enumerate_all(n);
    EXPECT_EQ(brute_force_bandwidth(n).value, bw);
    EXPECT_EQ(brute_force_antibandwidth(n).value, abw);
  }
}

TEST(Oracle, WitnessAttainsValueAndIsLexFirst) {
  for (int n = 1; n <= 3; ++n) {
    const OracleResult bw = brute_force_bandwidth(n);
    const OracleResult abw = brute_force_antibandwidth(n);
    EXPECT_EQ(bw.witness.kind(), NumberingKind::custom);
    EXPECT_EQ(bandwidth_of(bw.witness), bw.value);
    EXPECT_EQ(antibandwidth_of(abw.witness), abw.value);

    std::vector<std::uint32_t> perm(vertex_count(n));
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::uint32_t> first_bw, first_abw;
    do {
      std::vector<Vertex> order;
      for (auto b : perm) order.push_back(Vertex{b});
      const auto m = evaluate(Numbering::from_order(n, order, NumberingKind::custom));
      if (first_bw.empty() && m.bandwidth == bw.value) first_bw = perm;
      if (first_abw.empty() && m.antibandwidth == abw.value) first_abw = perm;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint32_t> got_bw, got_abw;
    for (const Vertex v : bw.witness.order()) got_bw.push_back(v.bits);
    for (const Vertex v : abw.witness.order()) got_abw.push_back(v.bits);
    EXPECT_EQ(got_bw, first_bw);
    EXPECT_EQ(got_abw, first_abw);
  }
}

TEST(Oracle, AgreesWithConstructions) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(brute_force_bandwidth(n).value, bandwidth_of(hales_numbering(n)));
    EXPECT_EQ(brute_force_antibandwidth(n).value, antibandwidth_of(antiband_numbering(n)));
  }
}

TEST(Oracle, RejectsLargeDimensions) {
  EXPECT_THROW(brute_force_bandwidth(4), RangeError);
  EXPECT_THROW(brute_force_antibandwidth(4), RangeError);
}

TEST(AdjacencyFromDefinition, Examples) {
  const Numbering identity =
      Numbering::from_order(1, {Vertex{0}, Vertex{1}}, NumberingKind::custom);
  EXPECT_EQ(adjacency_from_definition(identity).entries(),
            (std::vector<Entry>{{1, 2}, {2, 1}}));
  EXPECT_EQ(adjacency_from_definition(hales_numbering(2)).nnz(), 8u);
  EXPECT_EQ(block_bandwidth(adjacency_from_definition(hales_numbering(3))), 4u);
  EXPECT_THROW(adjacency_from_definition(hales_numbering(11)), RangeError);
}

TEST(AdjacencyFromDefinition, SymmetricWithExpectedCount) {
  for (int n = 1; n <= 8; ++n) {
    for (const Numbering& num : {hales_numbering(n), antiband_numbering(n)}) {
      const SparseBlock m = adjacency_from_definition(num);
      EXPECT_EQ(m.nnz(), 2 * edge_count(n));
      EXPECT_EQ(m, m.transposed());
      EXPECT_EQ(block_bandwidth(m), bandwidth_of(num));
      EXPECT_EQ(block_bandwidth(m), matrix_bandwidth(num));
    }
  }
}

}  // namespace
}  // namespace cubeband
