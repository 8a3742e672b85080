#pragma once

/// \file cubeband/layout.hpp
/// \brief Edge-scan evaluation of numberings and the even/odd antibandwidth layout.

#include <cstdint>

#include "cubeband/hales.hpp"

namespace cubeband {

struct LayoutMetrics {
  std::uint64_t bandwidth = 0;      ///< max |eta(u) - eta(v)| over edges
  std::uint64_t antibandwidth = 0;  ///< min |eta(u) - eta(v)| over edges
};

/// Both metrics from a single scan over all n 2^(n-1) edges.
LayoutMetrics evaluate(const Numbering& num);

std::uint64_t bandwidth_of(const Numbering& num);
std::uint64_t antibandwidth_of(const Numbering& num);

/// Even-weight layers A_0, A_2, ... followed by odd-weight layers A_1, A_3, ...,
/// each in Hales order.
Numbering antiband_numbering(int n);
Numbering antiband_numbering(const LayerTable& table);

}  // namespace cubeband
