#include "projdim/automaton.hpp"
#include "projdim/cocycle.hpp"
#include "projdim/dimension.hpp"
#include "projdim/gibbs.hpp"
#include "projdim/oracle.hpp"
#include "projdim/simplex.hpp"
#include "projdim/subshift.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace projdim;

namespace {

// Big integers cross the boundary as Python ints via their decimal string.
py::object to_py(const BigInt& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10)); }

py::tuple enclosure(const Enclosure& e) { return py::make_tuple(e.lower, e.upper); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact overlap counts, pressure and dimension bounds for projected Sierpinski measures";
    m.attr("__version__") = std::string(kVersion);

    static py::exception<Error> error(m, "ProjdimError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error;
            PyErr_SetObject(exc.ptr(), py::make_tuple(std::string(to_string(e.kind())), e.what()).ptr());
        }
    });

    m.def("slopes_up_to", [](int q_max) {
        std::vector<std::pair<long long, long long>> out;
        for (const auto& s : slopes_up_to(q_max)) out.emplace_back(s.p(), s.q());
        return out;
    }, py::arg("q_max"));

    m.def("count", [](long long p, long long q, std::size_t n, const std::string& method) {
        const auto s = make_slope(p, q);
        if (method == "oracle") return to_py(overlap_count_exact(s, n));
        if (method == "paths") return to_py(count_via_paths(build_overlap_automaton(s), n));
        if (method == "cocycle") return to_py(count_via_cocycle(s, n));
        throw Error(ErrorKind::InvalidArgument, "method is oracle, paths or cocycle");
    }, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("method") = "paths");

    m.def("overlap_growth", [](long long p, long long q, double tol) {
        PerronOptions opt;
        opt.tol = tol;
        return enclosure(overlap_growth(build_overlap_automaton(make_slope(p, q)), opt));
    }, py::arg("p"), py::arg("q"), py::arg("tol") = 1e-9);

    m.def("strongly_connected", [](long long p, long long q) {
        return strong_connectivity(build_overlap_automaton(make_slope(p, q)));
    }, py::arg("p"), py::arg("q"));

    m.def("pressure_gap", [](long long p, long long q) {
        const auto g = pressure_gap_check(make_slope(p, q));
        return py::dict(py::arg("N") = enclosure(g.N), py::arg("P") = enclosure(g.P), py::arg("ok") = g.ok);
    }, py::arg("p"), py::arg("q"));

    m.def("entropy", [](long long p, long long q, std::size_t n) { return hrw_estimates(make_slope(p, q), n).H; },
          py::arg("p"), py::arg("q"), py::arg("n") = 8);

    m.def("dimension_report_json", [](long long p, long long q, std::size_t entropy_n) {
        DimensionOptions opt;
        opt.entropy_n = entropy_n;
        return to_json(dimension_report(make_slope(p, q), opt));
    }, py::arg("p"), py::arg("q"), py::arg("entropy_n") = kDefaultBruteCap);

    m.def("fourier_nondecay", [](long long p, long long q, std::size_t n_max) {
        const auto r = fourier_nondecay(make_slope(p, q), n_max);
        return py::dict(py::arg("nondecay") = r.nondecay, py::arg("modulus_at_q") = r.modulus_at_q,
                        py::arg("max_deviation") = r.max_deviation);
    }, py::arg("p"), py::arg("q"), py::arg("n_max") = kFourierNondecayCap);

    m.def("contractive_word_count", [](std::size_t length) { return contractive_words(length).size(); },
          py::arg("length") = 3);
    m.def("max_contraction_tau", &max_contraction_tau);

    m.def("weak_gibbs", [](long long p, long long q, std::size_t n_max) {
        std::vector<double> out;
        for (const auto& w : weak_gibbs_constants(build_gibbs_system(make_slope(p, q)), n_max)) out.push_back(w.log_c_over_n);
        return out;
    }, py::arg("p"), py::arg("q"), py::arg("n_max") = 20);
}
