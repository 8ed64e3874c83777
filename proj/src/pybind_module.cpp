#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "lplab/calkin.hpp"
#include "lplab/diagnostics.hpp"
#include "lplab/errors.hpp"
#include "lplab/gf2.hpp"
#include "lplab/graph_io.hpp"
#include "lplab/polytope.hpp"
#include "lplab/sampling.hpp"
#include "lplab/simulator.hpp"
#include "lplab/witness.hpp"
#include "lplab/witness_io.hpp"

namespace py = pybind11;
using namespace lplab;

namespace {

// Rationals cross the boundary as "p/q" strings so Python can hand them to
// fractions.Fraction without precision loss.
LlrVector llr_from_strings(const std::vector<std::string>& g) {
    LlrVector out;
    for (const auto& s : g) out.push_back(rat_from_string(s));
    return out;
}

std::vector<std::string> rats_to_strings(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(rat_to_string(r));
    return out;
}

BitVector bits(const std::string& s) { return BitVector::from_string(s); }

}  // namespace

PYBIND11_MODULE(_lplab, mod) {
    mod.doc() = "LP decoding of LDPC codes: exact-rational decoders, dual witnesses, numerics";

    py::register_exception<capacity_error>(mod, "CapacityError");
    py::register_exception<numeric_error>(mod, "NumericError");
    py::register_exception<parse_error>(mod, "InputError");
    py::register_exception<structural_error>(mod, "StructuralError");

    py::class_<TannerGraph>(mod, "TannerGraph")
        .def_static("from_supports", &TannerGraph::from_supports, py::arg("n"),
                    py::arg("supports"))
        .def_property_readonly("n", &TannerGraph::num_vars)
        .def_property_readonly("m", &TannerGraph::num_checks)
        .def("check", [](const TannerGraph& g, int j) { return g.check(j).to_string(); })
        .def("check_neighbors", &TannerGraph::check_neighbors)
        .def("var_neighbors", &TannerGraph::var_neighbors)
        .def("__eq__", [](const TannerGraph& a, const TannerGraph& b) { return a == b; });

    mod.def("sample_check_regular", &sample_check_regular, py::arg("n"), py::arg("m"),
            py::arg("d"), py::arg("seed"));
    mod.def("sample_variable_regular", &sample_variable_regular, py::arg("n"), py::arg("m"),
            py::arg("d_v"), py::arg("seed"));
    mod.def("augmented_graph", &augmented_graph, py::arg("g"), py::arg("k"),
            py::arg("span_cap") = 22);
    mod.def("parse_alist", &parse_alist);
    mod.def("emit_alist", &emit_alist);
    mod.def("parse_graph_json", &parse_graph_json);
    mod.def("emit_graph_json", &emit_graph_json);

    mod.def("girth", [](const TannerGraph& g) -> py::object {
        auto gi = girth(g);
        return gi ? py::cast(*gi) : py::none();
    });

    mod.def(
        "lp_decode",
        [](const TannerGraph& g, const std::vector<std::string>& gamma) {
            auto r = lp_decode(g, llr_from_strings(gamma));
            py::dict d;
            d["success"] = r.success;
            d["optimum"] = rat_to_string(r.optimum);
            if (!r.success) {
                d["reason"] = r.reason == DecodeResult::Reason::NonzeroOptimum
                                  ? "nonzero_optimum"
                                  : "zero_not_unique";
                d["certificate"] = rats_to_strings(r.certificate);
            }
            return d;
        },
        py::arg("g"), py::arg("gamma"));

    mod.def(
        "ml_decode",
        [](const TannerGraph& g, const std::vector<std::string>& gamma) {
            auto r = ml_decode(g, llr_from_strings(gamma));
            py::dict d;
            d["optimum"] = rat_to_string(r.optimum);
            py::list mins;
            for (const auto& x : r.minimizers) mins.append(x.to_string());
            d["minimizers"] = mins;
            return d;
        },
        py::arg("g"), py::arg("gamma"));

    mod.def("enumerate_vertices", [](const TannerGraph& g) {
        auto vs = enumerate_vertices(build_fundamental_polytope(g));
        std::vector<std::vector<std::string>> out;
        for (const auto& x : vs) out.push_back(rats_to_strings(x));
        return out;
    });

    mod.def("bsc_pseudoweight", [](const TannerGraph& g) -> py::object {
        auto pw = bsc_pseudoweight(enumerate_vertices(build_fundamental_polytope(g)));
        return pw.infinite ? py::none() : py::cast(pw.value);
    });

    mod.def(
        "find_dual_witness",
        [](const TannerGraph& g, const std::vector<std::string>& gamma) {
            auto ws = find_dual_witness(g, llr_from_strings(gamma));
            py::dict d;
            d["found"] = ws.found;
            d["slack"] = rat_to_string(ws.slack);
            if (ws.found) d["witness"] = emit_witness_json(ws.w, llr_from_strings(gamma));
            return d;
        },
        py::arg("g"), py::arg("gamma"));

    mod.def(
        "verify_dual_witness",
        [](const TannerGraph& g, const std::string& witness_json) {
            auto pw = parse_witness_json(witness_json);
            auto rep = verify_dual_witness(g, pw.gamma, pw.w);
            py::dict d;
            d["valid"] = rep.valid;
            d["hyperflow"] = verify_hyperflow(g, pw.gamma, pw.w);
            d["primitive"] = is_primitive(g, pw.gamma, pw.w);
            return d;
        },
        py::arg("g"), py::arg("witness_json"));

    mod.def(
        "beta_d",
        [](int d, double tol) {
            auto th = beta_d(d, tol);
            return py::make_tuple(th.alpha, th.beta);
        },
        py::arg("d"), py::arg("tol") = 1e-10);
    mod.def("nondegeneracy_bound", &nondegeneracy_bound, py::arg("n"), py::arg("m"), py::arg("d"),
            py::arg("g"), py::arg("k"));
    mod.def(
        "verify_decomposition",
        [](int n, int d) {
            auto r = verify_decomposition(n, d);
            return py::make_tuple(r.reconstruction, r.inversion);
        },
        py::arg("n"), py::arg("d"));

    mod.def("bsc_sample", [](int n, double eps, uint64_t seed) {
        return bsc_sample(n, eps, seed).to_string();
    });
    mod.def(
        "wer_estimate",
        [](const TannerGraph& g, double eps, long long trials, uint64_t seed, int jobs) {
            auto r = wer_estimate(g, eps, trials, seed, "", jobs);
            py::dict d;
            d["trials"] = r.trials;
            d["failures"] = r.failures;
            d["wer"] = r.wer;
            d["ci_lo"] = r.ci_lo;
            d["ci_hi"] = r.ci_hi;
            return d;
        },
        py::arg("g"), py::arg("epsilon"), py::arg("trials"), py::arg("seed"),
        py::arg("jobs") = 1);
    mod.def(
        "decode_with_help",
        [](const TannerGraph& g, const std::string& y, int b) -> py::object {
            auto z = decode_with_help(g, bits(y), b);
            return z ? py::cast(z->to_string()) : py::none();
        },
        py::arg("g"), py::arg("y"), py::arg("b"));
}
