// Python bindings for the main operations: graph construction, graded
// traces (all engines), dual traces, multiplicities, and the Koszul
// identity check. Exact rationals cross the boundary as
// fractions.Fraction, arbitrary-precision integers as Python ints.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lga/dual.hpp"
#include "lga/graph_io.hpp"
#include "lga/oracle.hpp"
#include "lga/rep.hpp"
#include "lga/trace.hpp"

namespace py = pybind11;
using namespace lga;

namespace {

py::object py_int(const Int& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object py_fraction(const Rat& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_str());
}

py::list series_list(const TruncatedSeries& s) {
    py::list out;
    for (int k = 0; k <= s.truncation_degree(); ++k) out.append(py_fraction(s[k]));
    return out;
}

py::list poly_list(const Poly& p) {
    py::list out;
    for (int k = 0; k <= p.degree(); ++k) out.append(py_fraction(p[k]));
    if (p.is_zero()) out.append(py_fraction(Rat(0)));
    return out;
}

Partition to_partition(const std::vector<int>& parts) { return Partition{parts}; }

DihedralElement dn_spec(const std::string& sigma) { return parse_dihedral(sigma); }

Perm qn_perm(const std::string& sigma, int n) {
    if (sigma.empty() || sigma == "id") return identity_perm(n);
    if (sigma.front() == '(') return parse_cycles(sigma, n);
    Partition mu = parse_partition(sigma);
    if (mu.n() != n) throw std::invalid_argument("cycle type does not sum to n");
    return representative_of(mu);
}

py::dict mult_dict(const GradedMultiplicity& m) {
    py::dict out;
    for (int c = 0; c < m.columns(); ++c)
        out[py::str(m.names[static_cast<size_t>(c)])] = series_list(m.series[static_cast<size_t>(c)]);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graded traces and representation multiplicities of layered-graph algebras";

    py::class_<LayeredGraph>(m, "LayeredGraph")
        .def_property_readonly("vertex_count", &LayeredGraph::vertex_count)
        .def_property_readonly("star", &LayeredGraph::star)
        .def_property_readonly("max_level", &LayeredGraph::max_level)
        .def("level", &LayeredGraph::level, py::arg("v"))
        .def("label", &LayeredGraph::label, py::arg("v"))
        .def("reachable", &LayeredGraph::reachable, py::arg("v"), py::arg("w"))
        .def("find_label", &LayeredGraph::find_label, py::arg("label"))
        .def("validate",
             [](const LayeredGraph& g) {
                 py::list out;
                 for (const auto& d : validate(g))
                     out.append(py::make_tuple(
                         d.severity == Diagnostic::Severity::error ? "error" : "warning",
                         d.message));
                 return out;
             })
        .def("is_uniform", [](const LayeredGraph& g) { return is_uniform(g); })
        .def("chain_count", [](const LayeredGraph& g) {
            return for_each_chain(g, all_vertices_mask(g), [](std::span<const int>) {});
        });

    m.def("build_dn", [](int n) { return build_dn(n).graph; }, py::arg("n"));
    m.def("build_boolean_lattice", [](int n) { return build_boolean_lattice(n).graph; },
          py::arg("n"));
    m.def("parse_graph", &parse_graph, py::arg("document"));
    m.def("format_graph", &format_graph, py::arg("graph"));

    m.def("hilbert", [](const LayeredGraph& g, int degree) {
        return series_list(expand(hilbert_series(g), degree));
    }, py::arg("graph"), py::arg("degree") = 10);

    m.def("dn_trace", [](int n, const std::string& sigma, int degree, const std::string& method) {
        DnFamily fam = build_dn(n);
        DihedralElement e = dn_spec(sigma);
        VertexPermutation perm = dihedral_element(fam, e);
        if (method == "moebius") return series_list(expand(graded_trace_moebius(fam.graph, perm), degree));
        if (method == "wordcount") return series_list(graded_trace_wordcount(fam.graph, perm, degree));
        if (method == "closed") return series_list(expand(closed_form_dn(n, e), degree));
        if (method == "oracle") return series_list(count_fixed_words(fam.graph, perm, degree));
        throw std::invalid_argument("unknown method: " + method);
    }, py::arg("n"), py::arg("sigma"), py::arg("degree") = 10, py::arg("method") = "moebius");

    m.def("qn_trace", [](int n, const std::string& sigma, int degree, const std::string& method) {
        BooleanLattice lat = build_boolean_lattice(n);
        Perm p = qn_perm(sigma, n);
        VertexPermutation perm = permutation_on_lattice(lat, p);
        if (method == "moebius") return series_list(expand(graded_trace_moebius(lat.graph, perm), degree));
        if (method == "wordcount") return series_list(graded_trace_wordcount(lat.graph, perm, degree));
        if (method == "closed") return series_list(expand(closed_form_qn(n, cycle_type(p)), degree));
        if (method == "oracle") return series_list(count_fixed_words(lat.graph, perm, degree));
        throw std::invalid_argument("unknown method: " + method);
    }, py::arg("n"), py::arg("sigma"), py::arg("degree") = 10, py::arg("method") = "moebius");

    m.def("dn_dual_trace", [](int n, const std::string& sigma) {
        return poly_list(dual_trace_dn(n, dn_spec(sigma)));
    }, py::arg("n"), py::arg("sigma"));

    m.def("qn_dual_trace", [](int n, const std::string& sigma, const std::string& method) {
        if (method == "closed")
            return poly_list(dual_trace_qn_closed(n, cycle_type(qn_perm(sigma, n))));
        if (method == "oracle") return poly_list(dual_trace_qn_oracle(n, qn_perm(sigma, n)));
        throw std::invalid_argument("unknown method: " + method);
    }, py::arg("n"), py::arg("sigma"), py::arg("method") = "closed");

    m.def("dn_multiplicities", [](int n, int degree) {
        TruncatedSeries a = expand(closed_form_dn(n, DihedralElement::identity()), degree);
        TruncatedSeries b = expand(closed_form_dn(n, DihedralElement::rotation(1)), degree);
        TruncatedSeries c = expand(closed_form_dn(n, DihedralElement::s()), degree);
        return mult_dict(multiplicities_dn(n, a, b, c));
    }, py::arg("n"), py::arg("degree") = 10);

    m.def("qn_multiplicities", [](int n, int degree) {
        std::vector<TruncatedSeries> traces;
        for (const Partition& mu : partitions(n))
            traces.push_back(expand(closed_form_qn(n, mu), degree));
        return mult_dict(multiplicities_sn(n, traces));
    }, py::arg("n"), py::arg("degree") = 10);

    m.def("dn_dual_multiplicities",
          [](int n, int degree) { return mult_dict(dual_multiplicities_dn(n, degree)); },
          py::arg("n"), py::arg("degree") = 3);

    m.def("qn_dual_multiplicities",
          [](int n, int degree) { return mult_dict(dual_multiplicities_sn(n, degree)); },
          py::arg("n"), py::arg("degree") = 10);

    m.def("koszul_dn", [](int n, const std::string& sigma, int degree) {
        DihedralElement e = dn_spec(sigma);
        return koszul_identity_check(closed_form_dn(n, e), dual_trace_dn(n, e), degree);
    }, py::arg("n"), py::arg("sigma"), py::arg("degree") = 12);

    m.def("koszul_qn", [](int n, const std::string& sigma, int degree) {
        Partition mu = cycle_type(qn_perm(sigma, n));
        return koszul_identity_check(closed_form_qn(n, mu), dual_trace_qn_closed(n, mu), degree);
    }, py::arg("n"), py::arg("sigma"), py::arg("degree") = 12);

    m.def("verify_dn", [](int n, const std::string& sigma, int degree) {
        DnFamily fam = build_dn(n);
        VertexPermutation perm = dihedral_element(fam, dn_spec(sigma));
        return verify_trace(fam.graph, perm, degree).equal;
    }, py::arg("n"), py::arg("sigma"), py::arg("degree") = 5);

    m.def("verify_qn", [](int n, const std::string& sigma, int degree) {
        BooleanLattice lat = build_boolean_lattice(n);
        VertexPermutation perm = permutation_on_lattice(lat, qn_perm(sigma, n));
        return verify_trace(lat.graph, perm, degree).equal;
    }, py::arg("n"), py::arg("sigma"), py::arg("degree") = 5);

    m.def("partitions", [](int n) {
        py::list out;
        for (const Partition& p : partitions(n)) out.append(p.parts);
        return out;
    }, py::arg("n"));

    m.def("class_size", [](const std::vector<int>& mu) { return py_int(class_size(to_partition(mu))); },
          py::arg("mu"));

    m.def("sn_character", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return py_int(sn_character(to_partition(lam), to_partition(mu)));
    }, py::arg("lam"), py::arg("mu"));

    m.def("dn_dimension_recurrence",
          [](int n, int k) { return py_int(dn_dimension_recurrence(n, k)); }, py::arg("n"),
          py::arg("k"));

    m.def("orthogonality_check", [](int n, const std::string& group) {
        if (group == "Sn") return orthogonality_check_sn(n);
        if (group == "Dn") return orthogonality_check_dn(n);
        throw std::invalid_argument("group must be Sn or Dn");
    }, py::arg("n"), py::arg("group"));
}
