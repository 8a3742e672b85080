#include "cubeband/verify.hpp"

#include <algorithm>

#include <json.hpp>

#include "cubeband/blocks.hpp"
#include "cubeband/formulas.hpp"
#include "cubeband/layout.hpp"
#include "cubeband/oracle.hpp"

namespace cubeband {

namespace {

std::uint64_t to_u64(const ExactInt& x) { return x.convert_to<std::uint64_t>(); }

class Recorder {
 public:
  explicit Recorder(std::vector<CheckRecord>& out) : out_(out) {}

  void equal(std::string check, int n, std::uint64_t expected, std::uint64_t actual) {
    out_.push_back(CheckRecord{std::move(check), n, expected, actual, expected == actual});
  }

 private:
  std::vector<CheckRecord>& out_;
};

void check_structure(Recorder& rec, int n, const LayerTable& table, const Numbering& hales) {
  const Numbering sorted = hales_numbering(n, Construction::comparator_sort);
  std::uint64_t matching = 0;
  for (std::uint64_t v = 0; v < vertex_count(n); ++v) matching += hales.ranks()[v] == sorted.ranks()[v];
  rec.equal("hales_recursion_equivalence", n, vertex_count(n), matching);

  std::uint64_t decreasing = 0;
  for (const auto& layer : table.layers) {
    decreasing += std::adjacent_find(layer.begin(), layer.end(), [](Vertex a, Vertex b) {
                    return a.bits <= b.bits;
                  }) == layer.end();
  }
  rec.equal("layers_decreasing", n, static_cast<std::uint64_t>(n) + 1, decreasing);
}

void check_blocks(Recorder& rec, int n, const LayerTable& table) {
  std::uint64_t upper = 0, lower = 0, transpose = 0, zero = 0, zero_pairs = 0, corners = 0;
  for (int k = 0; k < n; ++k) {
    const SparseBlock def_up = layer_adjacency(table, k, k + 1);
    const SparseBlock def_down = layer_adjacency(table, k + 1, k);
    upper += upper_block_recursive(n, k) == def_up;
    lower += lower_block_recursive(n, k + 1) == def_down;
    transpose += def_up == def_down.transposed();
  }
  for (int k = 0; k <= n; ++k) {
    for (int k2 = 0; k2 <= n; ++k2) {
      if (k - k2 == 1 || k2 - k == 1) continue;
      ++zero_pairs;
      zero += layer_adjacency(table, k, k2).nnz() == 0;
    }
  }
  rec.equal("upper_block_recursion", n, static_cast<std::uint64_t>(n), upper);
  rec.equal("lower_block_recursion", n, static_cast<std::uint64_t>(n), lower);
  rec.equal("block_transpose_symmetry", n, static_cast<std::uint64_t>(n), transpose);
  rec.equal("tridiagonal_zero_blocks", n, zero_pairs, zero);

  if (n >= 2) {
    // Bottom-left C(n-1,k) x C(n-1,k) corner of M^(n)_{k,k+1} is the identity.
    for (int k = 1; k < n; ++k) {
      const SparseBlock b = upper_block_recursive(n, k);
      const std::uint64_t top = layer_size(n - 1, k - 1);
      const std::uint64_t side = layer_size(n - 1, k);
      bool ok = true;
      for (const Entry e : b.entries()) {
        if (e.row > top && e.col <= side) ok = ok && e.row - top == e.col;
      }
      for (std::uint64_t i = 1; i <= side; ++i) {
        ok = ok && b.contains(static_cast<std::uint32_t>(top + i), static_cast<std::uint32_t>(i));
      }
      corners += ok;
    }
    rec.equal("upper_identity_corner", n, static_cast<std::uint64_t>(n) - 1, corners);
  }
}

void check_radii(Recorder& rec, int n, const Numbering& hales) {
  const std::vector<ExactInt> up = radius_up_row(n);
  std::uint64_t up_ok = 0, down_ok = 0, direct_max = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t direct = manhattan_radius(upper_block_recursive(n, k));
    up_ok += to_u64(up[static_cast<std::size_t>(k)]) == direct;
    direct_max = std::max(direct_max, direct);
  }
  for (int k = 1; k <= n; ++k) {
    down_ok += to_u64(radius_down_closed(n, k)) == manhattan_radius(lower_block_recursive(n, k));
  }
  rec.equal("radius_up_recursion", n, static_cast<std::uint64_t>(n), up_ok);
  rec.equal("radius_down_closed", n, static_cast<std::uint64_t>(n), down_ok);
  rec.equal("radius_decomposition", n, matrix_bandwidth(hales), direct_max);
  rec.equal("radius_max_at_half", n, to_u64(hypercube_bandwidth(n)),
            to_u64(up[static_cast<std::size_t>(n / 2)]));
}

void check_deltas(Recorder& rec, int n, const LayerTable& table) {
  if (n >= 2) {
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    // Report the first deviating value, or the common value if none deviates.
    std::uint64_t lower = half;
    for (int k = 1; k <= n; k += 2) {
      const std::uint64_t d = delta(table, k, k - 1);
      if (d != half) {
        lower = d;
        break;
      }
    }
    rec.equal("delta_lower_constant", n, half, lower);

    std::uint64_t upper_min = UINT64_MAX;
    for (int k = 1; k + 1 <= n; k += 2) upper_min = std::min(upper_min, delta(table, k, k + 1));
    rec.equal("delta_upper_minimum", n, half - to_u64(central_binomial_sum(n - 1)), upper_min);
  }
  rec.equal("delta_combined", n, to_u64(hypercube_antibandwidth(n)), combined_delta(table));
}

void check_materialized(Recorder& rec, int n, const Numbering& hales, const Numbering& anti) {
  rec.equal("matrix_bandwidth_hales", n, bandwidth_of(hales),
            block_bandwidth(adjacency_from_definition(hales)));
  rec.equal("matrix_bandwidth_antiband", n, bandwidth_of(anti),
            block_bandwidth(adjacency_from_definition(anti)));
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json item;
    item["check"] = r.check;
    item["n"] = r.n;
    item["expected"] = r.expected;
    item["actual"] = r.actual;
    item["pass"] = r.pass;
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

VerifyReport run_verify(int n_max) {
  require_dim(n_max, kMaxVerifyDim, "n_max");
  VerifyReport report;
  Recorder rec(report.records);
  for (int n = 1; n <= n_max; ++n) {
    const LayerTable table = layer_table_recursive(n);
    const Numbering hales = numbering_from_table(table);
    const Numbering anti = antiband_numbering(table);

    rec.equal("bandwidth_formula", n, to_u64(hypercube_bandwidth(n)), bandwidth_of(hales));
    rec.equal("antibandwidth_formula", n, to_u64(hypercube_antibandwidth(n)),
              antibandwidth_of(anti));
    if (n <= kMaxOracleDim) {
      rec.equal("oracle_bandwidth", n, brute_force_bandwidth(n).value, bandwidth_of(hales));
      rec.equal("oracle_antibandwidth", n, brute_force_antibandwidth(n).value,
                antibandwidth_of(anti));
    }
    if (n <= kMaxStructuralDim) check_structure(rec, n, table, hales);
    if (n <= kMaxBlockCheckDim) check_blocks(rec, n, table);
    if (n <= kMaxStructuralDim) {
      check_radii(rec, n, hales);
      check_deltas(rec, n, table);
    }
    if (n <= kMaxMaterializeCheckDim) check_materialized(rec, n, hales, anti);
  }
  return report;
}

}  // namespace cubeband
