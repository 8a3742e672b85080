// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All comparisons are exact; runtime budgets are enforced where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cubeband/cubeband.hpp"

namespace {

using namespace cubeband;
using Clock = std::chrono::steady_clock;

std::uint64_t u64(const ExactInt& x) { return x.convert_to<std::uint64_t>(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. bw(H^(n)) by edge scan equals the closed form, n = 1..20, within 60 s.
Outcome closed_form_bandwidth() {
  Outcome o;
  const std::map<int, std::uint64_t> frozen{{1, 1}, {2, 2}, {3, 4}, {4, 7}, {5, 13}, {10, 274}};
  const auto t0 = Clock::now();
  for (int n = 1; n <= 20; ++n) {
    const std::uint64_t scanned = bandwidth_of(hales_numbering(n));
    const std::uint64_t formula = u64(hypercube_bandwidth(n));
    o.require(scanned == formula, "n=" + std::to_string(n) + " scan " + std::to_string(scanned) +
                                      " formula " + std::to_string(formula));
    if (auto it = frozen.find(n); it != frozen.end()) {
      o.require(formula == it->second, "n=" + std::to_string(n) + " frozen value mismatch");
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "n=1..20 exact, " + std::to_string(secs) + " s";
  return o;
}

// 2. f(antiband numbering) by edge scan equals the closed form, n = 1..20.
Outcome closed_form_antibandwidth() {
  Outcome o;
  const std::map<int, std::uint64_t> frozen{{1, 1}, {2, 1}, {3, 2}, {4, 4}, {5, 9}, {10, 364}};
  const auto t0 = Clock::now();
  for (int n = 1; n <= 20; ++n) {
    const std::uint64_t scanned = antibandwidth_of(antiband_numbering(n));
    const std::uint64_t formula = u64(hypercube_antibandwidth(n));
    o.require(scanned == formula, "n=" + std::to_string(n) + " scan " + std::to_string(scanned) +
                                      " formula " + std::to_string(formula));
    if (auto it = frozen.find(n); it != frozen.end()) {
      o.require(formula == it->second, "n=" + std::to_string(n) + " frozen value mismatch");
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "n=1..20 exact, " + std::to_string(secs) + " s";
  return o;
}

// 3. Exhaustive optima equal the constructed layouts for n = 1, 2, 3.
Outcome oracle_optimality() {
  Outcome o;
  const std::uint64_t bw[] = {1, 2, 4};
  const std::uint64_t f[] = {1, 1, 2};
  const auto t0 = Clock::now();
  for (int n = 1; n <= 3; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const std::uint64_t best_bw = brute_force_bandwidth(n).value;
    const std::uint64_t best_f = brute_force_antibandwidth(n).value;
    o.require(best_bw == bw[i] && best_bw == bandwidth_of(hales_numbering(n)),
              "bandwidth n=" + std::to_string(n));
    o.require(best_f == f[i] && best_f == antibandwidth_of(antiband_numbering(n)),
              "antibandwidth n=" + std::to_string(n));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "bw 1,2,4 and f 1,1,2; " + std::to_string(secs) + " s";
  return o;
}

// 4. Recursive layer table and comparator sort give identical ranks, n = 1..12.
Outcome layer_recursion_equivalence() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const Numbering rec = numbering_from_table(layer_table_recursive(n));
    const Numbering sorted = hales_numbering(n, Construction::comparator_sort);
    o.require(rec.same_ranks(sorted), "n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=1..12, all ranks identical";
  return o;
}

// 5. Recursive upper/lower blocks equal definitional adjacency, n = 1..10.
Outcome block_recursion_equivalence() {
  Outcome o;
  std::size_t blocks = 0;
  for (int n = 1; n <= 10; ++n) {
    const LayerTable t = layer_table_recursive(n);
    for (int k = 0; k < n; ++k) {
      o.require(upper_block_recursive(n, k) == layer_adjacency(t, k, k + 1),
                "upper n=" + std::to_string(n) + " k=" + std::to_string(k));
      o.require(lower_block_recursive(n, k + 1) == layer_adjacency(t, k + 1, k),
                "lower n=" + std::to_string(n) + " k=" + std::to_string(k + 1));
      blocks += 2;
    }
  }
  if (o.pass) o.detail = std::to_string(blocks) + " blocks equal entry-for-entry";
  return o;
}

// 6. Radius recursion and closed form match direct radii; the maximum over k
//    is the bandwidth, attained at k = floor(n/2). n = 1..12.
Outcome radius_identities() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const auto row = radius_up_row(n);
    for (int k = 0; k < n; ++k) {
      o.require(u64(row[static_cast<std::size_t>(k)]) ==
                    manhattan_radius(upper_block_recursive(n, k)),
                "radius_up n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    for (int k = 1; k <= n; ++k) {
      o.require(u64(radius_down_closed(n, k)) == manhattan_radius(lower_block_recursive(n, k)),
                "radius_down n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    const ExactInt bw = hypercube_bandwidth(n);
    o.require(*std::max_element(row.begin(), row.end()) == bw, "max n=" + std::to_string(n));
    o.require(row[static_cast<std::size_t>(n / 2)] == bw, "argmax n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=1..12, all k";
  return o;
}

// 7. delta(n,k,k-1) = 2^(n-1) for odd k; min over odd k of delta(n,k,k+1) is
//    2^(n-1) minus the central binomial sum; combined minimum equals f(Q^(n)).
Outcome delta_identities() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    const LayerTable t = layer_table_recursive(n);
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    for (int k = 1; k <= n; k += 2) {
      o.require(delta(t, k, k - 1) == half,
                "delta_{k,k-1} n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    std::uint64_t upper = UINT64_MAX;
    for (int k = 1; k + 1 <= n; k += 2) upper = std::min(upper, delta(t, k, k + 1));
    o.require(upper == half - u64(central_binomial_sum(n - 1)),
              "min delta_{k,k+1} n=" + std::to_string(n));
    o.require(combined_delta(t) == u64(hypercube_antibandwidth(n)),
              "combined n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=2..12";
  return o;
}

// 8. Bandwidth of the materialized adjacency matrix equals the edge-scan
//    bandwidth for both layouts, n = 1..8.
Outcome matrix_bandwidth_equality() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    for (const Numbering& num : {hales_numbering(n), antiband_numbering(n)}) {
      o.require(block_bandwidth(adjacency_from_definition(num)) == bandwidth_of(num),
                std::string(to_string(num.kind())) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n=1..8, hales and antiband";
  return o;
}

// 9. `verify --n-max 12` exits 0 with byte-identical JSON on two runs.
Outcome verify_determinism() {
  Outcome o;
  std::string first;
  for (int run = 0; run < 2; ++run) {
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--n-max", "12"}, out, err);
    o.require(code == 0, "exit code " + std::to_string(code));
    if (run == 0) first = out.str();
    else o.require(out.str() == first, "outputs differ");
  }
  o.require(!first.empty(), "empty report");
  if (o.pass) o.detail = std::to_string(first.size()) + " bytes, identical, exit 0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 closed-form bandwidth", closed_form_bandwidth},
      {"AC2 closed-form antibandwidth", closed_form_antibandwidth},
      {"AC3 oracle optimality (n<=3)", oracle_optimality},
      {"AC4 layer recursion equivalence", layer_recursion_equivalence},
      {"AC5 block recursion equivalence", block_recursion_equivalence},
      {"AC6 radius identities", radius_identities},
      {"AC7 delta identities", delta_identities},
      {"AC8 matrix bandwidth equality", matrix_bandwidth_equality},
      {"AC9 verify determinism", verify_determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
