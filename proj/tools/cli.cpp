#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeband/cubeband.hpp"

namespace cubeband::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  bool quiet = false;
  std::string out_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string limits_text() {
  std::ostringstream s;
  s << "Limits:\n"
    << "  number, eval, oracle witness files   n <= " << kMaxEnumDim << "\n"
    << "  matrix --block, delta                n <= " << kMaxBlockDim << "\n"
    << "  matrix --full                        n <= " << kMaxFullMatrixDim << "\n"
    << "  oracle (exhaustive search)           n <= " << kMaxOracleDim << "\n"
    << "  formula                              n <= " << kMaxFormulaDim << "\n"
    << "  verify                               n <= " << kMaxVerifyDim << "\n"
    << "Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.\n";
  return s.str();
}

// Writes `payload` to --out if given, else to `out`. Returns true when the
// payload went to a file, so summaries can go to stdout.
bool emit(const Globals& g, std::ostream& out, const std::string& payload) {
  if (g.out_path.empty()) {
    out << payload;
    return false;
  }
  std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + g.out_path + "' for writing");
  file << payload;
  file.flush();
  if (!file) throw UsageError("failed writing '" + g.out_path + "'");
  return true;
}

void summarize(const Globals& g, bool to_file, std::ostream& out, std::ostream& err,
               const std::string& text, const ordered_json& json) {
  if (g.quiet) return;
  std::ostream& dest = to_file ? out : err;
  dest << (g.json ? json.dump() : text) << '\n';
}

std::string numbering_text(const Numbering& num) {
  std::ostringstream s;
  write_numbering(s, num);
  return s.str();
}

int cmd_number(const Globals& g, int n, const std::string& kind, std::ostream& out,
               std::ostream& err) {
  require_dim(n, kMaxEnumDim);
  const Numbering num = kind == "antiband" ? antiband_numbering(n) : hales_numbering(n);
  const LayoutMetrics m = evaluate(num);
  const bool to_file = emit(g, out, numbering_text(num));
  ordered_json j;
  j["n"] = n;
  j["kind"] = kind;
  j["bandwidth"] = m.bandwidth;
  j["antibandwidth"] = m.antibandwidth;
  summarize(g, to_file, out, err,
            "n=" + std::to_string(n) + " kind=" + kind + " bw=" + std::to_string(m.bandwidth) +
                " abw=" + std::to_string(m.antibandwidth),
            j);
  return kExitOk;
}

int cmd_matrix(const Globals& g, int n, const std::string& kind, bool full,
               const std::vector<int>& block, std::ostream& out) {
  if (full == !block.empty()) throw UsageError("matrix needs exactly one of --full or --block K K2");
  std::ostringstream s;
  if (full) {
    require_dim(n, kMaxFullMatrixDim, "full-matrix dimension");
    write_full_matrix_market(s, kind == "antiband" ? antiband_numbering(n) : hales_numbering(n));
  } else {
    require_dim(n, kMaxBlockDim, "block dimension");
    write_matrix_market(s, layer_adjacency(layer_table_recursive(n), block[0], block[1]));
  }
  emit(g, out, s.str());
  return kExitOk;
}

int cmd_eval(const Globals& g, const std::string& path, std::ostream& out) {
  Numbering num = [&] {
    if (path == "-") return read_numbering(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_numbering(in);
  }();
  const LayoutMetrics m = evaluate(num);
  ordered_json j;
  j["n"] = num.dim();
  j["kind"] = std::string(to_string(num.kind()));
  j["bandwidth"] = m.bandwidth;
  j["antibandwidth"] = m.antibandwidth;
  emit(g, out, j.dump() + "\n");
  return kExitOk;
}

std::string join_radii(const std::vector<ExactInt>& radii, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i) s += sep;
    s += radii[i].str();
  }
  return s;
}

// Values exceed 64 bits for large n, so JSON integers are written verbatim.
int cmd_formula(const Globals& g, int n_max, bool radii, std::ostream& out) {
  require_dim(n_max, kMaxFormulaDim, "n_max");
  std::string text;
  if (g.json) text += "[\n";
  else text += radii ? "n\tbw\tantibandwidth\tradius_up\n" : "n\tbw\tantibandwidth\n";
  for (int n = 1; n <= n_max; ++n) {
    const std::string bw = hypercube_bandwidth(n).str();
    const std::string f = hypercube_antibandwidth(n).str();
    if (g.json) {
      text += "  {\"n\": " + std::to_string(n) + ", \"bw\": " + bw + ", \"antibandwidth\": " + f;
      if (radii) text += ", \"radius_up\": [" + join_radii(radius_up_row(n), ", ") + "]";
      text += n == n_max ? "}\n" : "},\n";
    } else {
      text += std::to_string(n) + "\t" + bw + "\t" + f;
      if (radii) text += "\t" + join_radii(radius_up_row(n), ",");
      text += "\n";
    }
  }
  if (g.json) text += "]\n";
  emit(g, out, text);
  return kExitOk;
}

int cmd_verify(const Globals& g, int n_max, std::ostream& out, std::ostream& err) {
  const VerifyReport report = run_verify(n_max);
  emit(g, out, report.to_json());
  const auto passed = static_cast<std::size_t>(std::count_if(
      report.records.begin(), report.records.end(), [](const CheckRecord& r) { return r.pass; }));
  if (!g.quiet) {
    err << "verify: " << passed << "/" << report.records.size() << " checks passed\n";
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(const Globals& g, int n, const std::string& objective, std::ostream& out,
               std::ostream& err) {
  require_dim(n, kMaxOracleDim, "oracle dimension");
  const OracleResult r =
      objective == "antibandwidth" ? brute_force_antibandwidth(n) : brute_force_bandwidth(n);
  const bool to_file = emit(g, out, numbering_text(r.witness));
  ordered_json j;
  j["n"] = n;
  j["objective"] = objective;
  j["value"] = r.value;
  summarize(g, to_file, out, err,
            "n=" + std::to_string(n) + " objective=" + objective + " value=" +
                std::to_string(r.value),
            j);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal bandwidth and antibandwidth layouts of the n-cube", "cubeband"};
  app.footer(limits_text());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Suppress summary lines");
  app.add_option("--out", g.out_path, "Write the primary output to this file");

  int n = 0;
  std::string kind = "hales";
  const std::vector<std::string> kinds{"hales", "antiband"};

  auto* number = app.add_subcommand("number", "Write the Hales or antibandwidth numbering");
  number->add_option("-n", n, "Dimension")->required();
  number->add_option("--kind", kind, "Numbering kind")->check(CLI::IsMember(kinds));

  bool full = false;
  std::vector<int> block;
  auto* matrix = app.add_subcommand("matrix", "Export adjacency (sub)matrices as Matrix Market");
  matrix->add_option("-n", n, "Dimension")->required();
  matrix->add_option("--kind", kind, "Numbering for --full")->check(CLI::IsMember(kinds));
  matrix->add_flag("--full", full, "Full adjacency matrix (symmetric, lower triangle)");
  matrix->add_option("--block", block, "Layer-pair block M_{K,K2}")->expected(2);

  std::string path;
  auto* eval = app.add_subcommand("eval", "Bandwidth and antibandwidth of a numbering file");
  eval->add_option("file", path, "Numbering file, or - for stdin")->required();

  int n_max = 0;
  bool radii = false;
  auto* formula = app.add_subcommand("formula", "Tabulate the closed forms");
  formula->add_option("--n-max", n_max, "Largest dimension")->required();
  formula->add_flag("--radii", radii, "Include r(M_{k,k+1}) for k = 0..n-1");

  auto* verify = app.add_subcommand("verify", "Run all cross-checks up to --n-max");
  verify->add_option("--n-max", n_max, "Largest dimension")->required();

  std::string objective = "bandwidth";
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum and witness numbering");
  oracle->add_option("-n", n, "Dimension")->required();
  oracle->add_option("--objective", objective, "Quantity to optimize")
      ->check(CLI::IsMember({"bandwidth", "antibandwidth"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*number) return cmd_number(g, n, kind, out, err);
    if (*matrix) return cmd_matrix(g, n, kind, full, block, out);
    if (*eval) return cmd_eval(g, path, out);
    if (*formula) return cmd_formula(g, n_max, radii, out);
    if (*verify) return cmd_verify(g, n_max, out, err);
    if (*oracle) return cmd_oracle(g, n, objective, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cubeband::cli
