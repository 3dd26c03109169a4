#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "slender/bessel.hpp"
#include "slender/dynamics.hpp"
#include "slender/errors.hpp"
#include "slender/experiments.hpp"
#include "slender/profiles.hpp"
#include "slender/spectra.hpp"

namespace py = pybind11;
using namespace slender;

namespace {

EigenFamily make_family(const std::string& setting, const std::string& direction, const std::string& method,
                        double delta, long cutoff) {
    EigenFamily f{parse_setting(setting), parse_direction(direction), parse_method(method), delta, cutoff};
    f.validate();
    return f;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Slender-body eigenvalue spectra, Bessel functions and convergence studies";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
    py::register_exception<WindowError>(m, "WindowError", PyExc_IndexError);
    py::register_exception<ResolutionError>(m, "ResolutionError", PyExc_ValueError);

    m.def("bessel_k", &bessel_k, py::arg("order"), py::arg("z"));
    m.def("bessel_k_scaled", &bessel_k_scaled, py::arg("order"), py::arg("z"));
    m.def(
        "oracle_bessel_k", [](int order, double z) { return oracle_bessel_k(order, z).value; }, py::arg("order"),
        py::arg("z"));

    m.def(
        "eigenvalue",
        [](const std::string& setting, const std::string& direction, const std::string& method, double eps, long k,
           double delta, long cutoff) { return lambda(make_family(setting, direction, method, delta, cutoff), Mode(k, eps)); },
        py::arg("setting"), py::arg("direction"), py::arg("method"), py::arg("eps"), py::arg("k"),
        py::arg("delta") = 0.0, py::arg("cutoff") = -1);
    m.def(
        "b_function",
        [](const std::string& fam, double z, double delta, bool allow_post_singularity) {
            static const std::map<std::string, OdeFamily> names = {
                {"B", OdeFamily::B},           {"B_SB", OdeFamily::B_SB},         {"B_t", OdeFamily::B_t},
                {"B_SB_t", OdeFamily::B_SB_t}, {"B_n", OdeFamily::B_n},           {"B_SB_n", OdeFamily::B_SB_n},
                {"B_delta", OdeFamily::B_delta}, {"B_delta_t", OdeFamily::B_delta_t},
                {"B_delta_n", OdeFamily::B_delta_n}};
            const auto it = names.find(fam);
            if (it == names.end()) throw ConfigError("unknown B-function family '" + fam + "'");
            return b_function(it->second, z, delta, allow_post_singularity);
        },
        py::arg("family"), py::arg("z"), py::arg("delta") = 0.0, py::arg("allow_post_singularity") = false);
    m.def("gronwall_constants", [] {
        const auto g = gronwall_constants();
        return py::dict(py::arg("c_B") = g.c_B, py::arg("c_t") = g.c_t, py::arg("c_n") = g.c_n,
                        py::arg("c_l2") = g.c_l2, py::arg("c_t2") = g.c_t2, py::arg("c_n2") = g.c_n2,
                        py::arg("A1") = g.A1);
    });
    m.def(
        "traction_eigenvalue",
        [](const std::string& direction, double eps, long k) {
            return traction_eigenvalue_numeric(parse_direction(direction), Mode(k, eps));
        },
        py::arg("direction"), py::arg("eps"), py::arg("k"));

    m.def(
        "optimal_delta", [](const std::string& setting, double ratio) { return optimal_delta(parse_setting(setting), ratio); },
        py::arg("setting"), py::arg("ratio"));
    m.def(
        "convergence_study",
        [](const std::string& setting, const std::string& method, const std::string& regularity,
           std::vector<double> eps_grid, std::uint64_t seed, double delta) {
            if (eps_grid.empty()) eps_grid = default_eps_grid();
            const auto r = convergence_study(parse_setting(setting), parse_method(method),
                                             parse_regularity(regularity), eps_grid, seed, delta);
            return py::dict(py::arg("eps") = r.eps, py::arg("errors") = r.errors, py::arg("slope") = r.slope,
                            py::arg("residual") = r.residual, py::arg("delta") = r.delta);
        },
        py::arg("setting"), py::arg("method"), py::arg("regularity"), py::arg("eps_grid") = std::vector<double>{},
        py::arg("seed") = kSeeds[0], py::arg("delta") = 0.0);

    m.def("nu", &nu, py::arg("eps"), py::arg("k"));
    m.def("max_stable_dt", &max_stable_dt, py::arg("eps"), py::arg("k_max"), py::arg("empirical") = false);
}
