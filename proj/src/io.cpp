#include "cubeband/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace cubeband {

namespace {

constexpr std::string_view kNumberingMagic = "# cubeband numbering";

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

void write_numbering(std::ostream& out, const Numbering& num) {
  const int n = num.dim();
  std::string buf;
  buf.reserve(static_cast<std::size_t>(n + 12) * num.size() + 64);
  buf += kNumberingMagic;
  buf += " n=" + std::to_string(n) + " kind=" + std::string(to_string(num.kind())) + "\n";
  for (std::uint32_t number = 1; number <= num.size(); ++number) {
    buf += format_vertex(num.vertex_at(number), n);
    buf += '\t';
    buf += std::to_string(number);
    buf += '\n';
  }
  out << buf;
}

Numbering read_numbering(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty numbering file", 1);

  // # cubeband numbering n=<n> kind=<kind>
  std::string_view header = trim_cr(line);
  if (header.substr(0, kNumberingMagic.size()) != kNumberingMagic) {
    throw ParseError("expected header '# cubeband numbering n=<n> kind=<kind>'", 1);
  }
  std::istringstream fields{std::string(header.substr(kNumberingMagic.size()))};
  std::string n_field, kind_field, extra;
  fields >> n_field >> kind_field;
  if (n_field.rfind("n=", 0) != 0 || kind_field.rfind("kind=", 0) != 0 || (fields >> extra)) {
    throw ParseError("malformed header fields", 1);
  }
  int n = 0;
  if (!parse_int(std::string_view(n_field).substr(2), n) || n < 1 || n > kMaxEnumDim) {
    throw ParseError("header dimension '" + n_field.substr(2) + "' must be an integer in [1, " +
                         std::to_string(kMaxEnumDim) + "]",
                     1);
  }
  NumberingKind kind;
  try {
    kind = parse_numbering_kind(std::string_view(kind_field).substr(5));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), 1);
  }

  const std::uint64_t count = vertex_count(n);
  std::vector<Vertex> order(count);
  std::vector<std::size_t> vertex_line(count, 0);  // line that numbered each vertex
  std::vector<std::size_t> number_line(count, 0);  // line that used each number
  std::size_t lineno = 1;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view text = trim_cr(line);
    if (seen == count) {
      if (text.empty()) continue;
      throw ParseError("unexpected line after " + std::to_string(count) + " entries", lineno);
    }
    const auto tab = text.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected '<vertex>\\t<number>'", lineno);
    Vertex v;
    try {
      v = parse_vertex(text.substr(0, tab), n);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    std::uint64_t number = 0;
    if (!parse_int(text.substr(tab + 1), number) || number < 1 || number > count) {
      throw ParseError("number '" + std::string(text.substr(tab + 1)) + "' must be in [1, " +
                           std::to_string(count) + "]",
                       lineno);
    }
    if (vertex_line[v.bits] != 0) {
      throw ParseError("vertex " + format_vertex(v, n) + " already numbered on line " +
                           std::to_string(vertex_line[v.bits]),
                       lineno);
    }
    if (number_line[number - 1] != 0) {
      throw ParseError("number " + std::to_string(number) + " already used on line " +
                           std::to_string(number_line[number - 1]),
                       lineno);
    }
    vertex_line[v.bits] = lineno;
    number_line[number - 1] = lineno;
    order[number - 1] = v;
    ++seen;
  }
  if (seen != count) {
    throw ParseError("truncated: expected " + std::to_string(count) + " entries, found " +
                         std::to_string(seen),
                     lineno + 1);
  }
  return Numbering::from_order(n, std::move(order), kind);
}

void write_matrix_market(std::ostream& out, const SparseBlock& block) {
  std::ostringstream buf;
  buf << "%%MatrixMarket matrix coordinate pattern general\n";
  buf << block.rows() << ' ' << block.cols() << ' ' << block.nnz() << '\n';
  for (const Entry e : block.entries()) buf << e.row << ' ' << e.col << '\n';
  out << buf.str();
}

void write_full_matrix_market(std::ostream& out, const Numbering& num) {
  const int n = num.dim();
  require_dim(n, kMaxFullMatrixDim, "full-matrix dimension");
  std::vector<Entry> lower;
  lower.reserve(edge_count(n));
  for_each_edge(n, [&](std::uint32_t u, std::uint32_t v) {
    const std::uint32_t a = num.rank(Vertex{u});
    const std::uint32_t b = num.rank(Vertex{v});
    lower.push_back(Entry{std::max(a, b), std::min(a, b)});
  });
  std::sort(lower.begin(), lower.end());
  std::ostringstream buf;
  buf << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  buf << num.size() << ' ' << num.size() << ' ' << lower.size() << '\n';
  for (const Entry e : lower) buf << e.row << ' ' << e.col << '\n';
  out << buf.str();
}

}  // namespace cubeband
