#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubeband/cubeband.hpp"

namespace py = pybind11;
using namespace cubeband;

namespace {

py::int_ to_py(const ExactInt& x) {
  const std::string digits = x.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

std::vector<std::string> vertex_strings(std::span<const Vertex> vs, int n) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const Vertex v : vs) out.push_back(format_vertex(v, n));
  return out;
}

Numbering numbering_from_strings(const std::vector<std::string>& order, NumberingKind kind) {
  if (order.empty()) throw RangeError("empty order");
  const int n = static_cast<int>(order.front().size());
  std::vector<Vertex> vs;
  vs.reserve(order.size());
  for (const auto& s : order) vs.push_back(parse_vertex(s, n));
  return Numbering::from_order(n, std::move(vs), kind);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> entries_of(const SparseBlock& b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(b.nnz());
  for (const Entry e : b.entries()) out.emplace_back(e.row, e.col);
  return out;
}

}  // namespace

PYBIND11_MODULE(_cubeband, m) {
  m.doc() = "Hales numbering, bandwidth and antibandwidth of the n-cube";

  auto& base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.attr("MAX_ENUM_DIM") = kMaxEnumDim;
  m.attr("MAX_FORMULA_DIM") = kMaxFormulaDim;
  m.attr("MAX_BLOCK_DIM") = kMaxBlockDim;
  m.attr("MAX_FULL_MATRIX_DIM") = kMaxFullMatrixDim;
  m.attr("MAX_ORACLE_DIM") = kMaxOracleDim;

  // Vertices cross the boundary as "c_1...c_n" strings.
  m.def("weight", [](const std::string& v) { return weight(parse_vertex(v, static_cast<int>(v.size()))); });
  m.def("neighbors", [](const std::string& v) {
    const int n = static_cast<int>(v.size());
    const auto ns = neighbors(parse_vertex(v, n), n);
    return vertex_strings(ns, n);
  });
  m.def("edges", [](int n) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Edge e : edges(n)) out.emplace_back(format_vertex(e.u, n), format_vertex(e.v, n));
    return out;
  });
  m.def("vertex_bits", [](const std::string& v, int n) { return parse_vertex(v, n).bits; });
  m.def("format_vertex", [](std::uint32_t bits, int n) { return format_vertex(Vertex{bits}, n); });

  py::class_<Numbering>(m, "Numbering")
      .def_static("from_order", [](const std::vector<std::string>& order, const std::string& kind) {
        return numbering_from_strings(order, parse_numbering_kind(kind));
      }, py::arg("order"), py::arg("kind") = "custom")
      .def_property_readonly("n", &Numbering::dim)
      .def_property_readonly("kind", [](const Numbering& num) { return std::string(to_string(num.kind())); })
      .def("__len__", &Numbering::size)
      .def("rank", [](const Numbering& num, const std::string& v) {
        return num.rank(parse_vertex(v, num.dim()));
      })
      .def("vertex_at", [](const Numbering& num, std::uint32_t number) {
        if (number < 1 || number > num.size()) throw RangeError("number out of range");
        return format_vertex(num.vertex_at(number), num.dim());
      })
      .def("order", [](const Numbering& num) { return vertex_strings(num.order(), num.dim()); })
      .def("ranks", [](const Numbering& num) {
        return std::vector<std::uint32_t>(num.ranks().begin(), num.ranks().end());
      })
      .def("reversed", &Numbering::reversed)
      .def("same_ranks", &Numbering::same_ranks)
      .def("__repr__", [](const Numbering& num) {
        return "<Numbering n=" + std::to_string(num.dim()) + " kind=" +
               std::string(to_string(num.kind())) + ">";
      });

  m.def("hales_numbering", [](int n, const std::string& construction) {
    if (construction == "recursive") return hales_numbering(n, Construction::recursive);
    if (construction == "sort") return hales_numbering(n, Construction::comparator_sort);
    throw RangeError("construction must be 'recursive' or 'sort'");
  }, py::arg("n"), py::arg("construction") = "recursive");
  m.def("antiband_numbering", py::overload_cast<int>(&antiband_numbering), py::arg("n"));
  m.def("layer_table", [](int n) {
    const LayerTable t = layer_table_recursive(n);
    std::vector<std::vector<std::string>> out;
    for (const auto& layer : t.layers) out.push_back(vertex_strings(layer, n));
    return out;
  });

  m.def("bandwidth_of", &bandwidth_of);
  m.def("antibandwidth_of", &antibandwidth_of);
  m.def("evaluate", [](const Numbering& num) {
    const LayoutMetrics lm = evaluate(num);
    py::dict d;
    d["n"] = num.dim();
    d["kind"] = std::string(to_string(num.kind()));
    d["bandwidth"] = lm.bandwidth;
    d["antibandwidth"] = lm.antibandwidth;
    return d;
  });

  py::class_<SparseBlock>(m, "SparseBlock")
      .def_property_readonly("rows", &SparseBlock::rows)
      .def_property_readonly("cols", &SparseBlock::cols)
      .def_property_readonly("nnz", &SparseBlock::nnz)
      .def("entries", &entries_of)
      .def("transposed", &SparseBlock::transposed)
      .def("__eq__", [](const SparseBlock& a, const SparseBlock& b) { return a == b; })
      .def("to_matrix_market", [](const SparseBlock& b) {
        std::ostringstream s;
        write_matrix_market(s, b);
        return s.str();
      });

  m.def("layer_adjacency", [](int n, int k, int k2) {
    return layer_adjacency(layer_table_recursive(n), k, k2);
  });
  m.def("upper_block_recursive", &upper_block_recursive);
  m.def("lower_block_recursive", &lower_block_recursive);
  m.def("manhattan_radius", &manhattan_radius);
  m.def("block_bandwidth", &block_bandwidth);
  m.def("matrix_bandwidth", &matrix_bandwidth);
  m.def("block_offsets", [](int n, const std::string& ordering) {
    if (ordering != "standard" && ordering != "even_odd") {
      throw RangeError("ordering must be 'standard' or 'even_odd'");
    }
    const BlockLayout l =
        block_offsets(n, ordering == "standard" ? LayerOrdering::standard : LayerOrdering::even_odd);
    py::dict d;
    d["order"] = l.order;
    d["offset"] = l.offset;
    d["total"] = l.total;
    return d;
  }, py::arg("n"), py::arg("ordering") = "standard");
  m.def("delta", py::overload_cast<int, int, int>(&delta));
  m.def("combined_delta", [](int n) {
    require_dim(n, kMaxBlockDim);
    return combined_delta(layer_table_recursive(n));
  });

  m.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(binomial(n, k)); });
  m.def("hypercube_bandwidth", [](int n) { return to_py(hypercube_bandwidth(n)); });
  m.def("hypercube_antibandwidth", [](int n) { return to_py(hypercube_antibandwidth(n)); });
  m.def("radius_up", [](int n, int k) { return to_py(radius_up(n, k)); });
  m.def("radius_up_row", [](int n) {
    py::list out;
    for (const auto& r : radius_up_row(n)) out.append(to_py(r));
    return out;
  });
  m.def("radius_down_closed", [](int n, int k) { return to_py(radius_down_closed(n, k)); });

  m.def("brute_force_bandwidth", [](int n) {
    OracleResult r = brute_force_bandwidth(n);
    return py::make_tuple(r.value, std::move(r.witness));
  });
  m.def("brute_force_antibandwidth", [](int n) {
    OracleResult r = brute_force_antibandwidth(n);
    return py::make_tuple(r.value, std::move(r.witness));
  });
  m.def("adjacency_from_definition", &adjacency_from_definition);

  m.def("numbering_to_text", [](const Numbering& num) {
    std::ostringstream s;
    write_numbering(s, num);
    return s.str();
  });
  m.def("numbering_from_text", [](const std::string& text) {
    std::istringstream in(text);
    return read_numbering(in);
  });
  m.def("full_matrix_market", [](const Numbering& num) {
    std::ostringstream s;
    write_full_matrix_market(s, num);
    return s.str();
  });

  m.def("verify", [](int n_max) {
    const VerifyReport report = run_verify(n_max);
    py::list out;
    for (const auto& r : report.records) {
      py::dict d;
      d["check"] = r.check;
      d["n"] = r.n;
      d["expected"] = r.expected;
      d["actual"] = r.actual;
      d["pass"] = r.pass;
      out.append(d);
    }
    return out;
  });
  m.def("verify_json", [](int n_max) { return run_verify(n_max).to_json(); });
}
