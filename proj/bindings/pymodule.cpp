#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "torsionlab/checks.hpp"
#include "torsionlab/fox.hpp"
#include "torsionlab/json_io.hpp"
#include "torsionlab/knot.hpp"

namespace py = pybind11;
using namespace torsionlab;

namespace {

BasedChainComplex complex_from_lists(const std::vector<int>& dims,
                                     const std::vector<std::vector<std::vector<double>>>& bnds,
                                     const std::vector<std::vector<std::vector<double>>>& hom) {
    nlohmann::json j;
    j["dims"] = dims;
    j["boundaries"] = bnds;
    j["homology_bases"] = hom;
    return complex_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_torsionlab, m) {
    m.doc() = "sign-determined (Ad o rho)-twisted Reidemeister torsion of knot exteriors";

    py::register_exception<InvalidParameter>(m, "InvalidParameterError", PyExc_ValueError);

    py::class_<GroupPresentation>(m, "Presentation")
        .def_static("parse", &parse_presentation, py::arg("text"))
        .def_static("torus_knot", &torus_knot_presentation, py::arg("q"))
        .def_property_readonly("rank", &GroupPresentation::rank)
        .def_property_readonly("generators",
                               [](const GroupPresentation& p) { return p.generator_names; })
        .def("to_dsl", [](const GroupPresentation& p) { return to_dsl(p); })
        .def("alexander",
             [](const GroupPresentation& p) { return alexander_polynomial(p).str(); })
        .def("abelianization", &abelianization_exponents)
        .def("verify_peripheral_identity", &verify_peripheral_identity)
        .def("tau0", &tau0);

    py::class_<Representation>(m, "Representation")
        .def(py::init([](const GroupPresentation& p,
                         const std::vector<std::array<double, 4>>& images) {
                 std::vector<UnitQuaternion> qs;
                 qs.reserve(images.size());
                 for (const auto& q : images) qs.emplace_back(q[0], q[1], q[2], q[3]);
                 return Representation(p, std::move(qs));
             }),
             py::arg("presentation"), py::arg("images"))
        .def_static("torus", &torus_rep, py::arg("q"), py::arg("l"), py::arg("t"))
        .def_static("abelian", &abelian_rep, py::arg("presentation"), py::arg("theta"))
        .def_property_readonly("residual", &Representation::residual)
        .def_property_readonly("images", [](const Representation& r) {
            std::vector<std::array<double, 4>> out;
            for (const UnitQuaternion& q : r.images()) out.push_back({q.w, q.x, q.y, q.z});
            return out;
        });

    m.def("nonabelian_torsion", &nonabelian_torsion, py::arg("presentation"),
          py::arg("representation"), py::arg("rank_tol") = kRankTolDefault);
    m.def("abelian_torsion", &abelian_torsion, py::arg("presentation"), py::arg("theta"),
          py::arg("rank_tol") = kRankTolDefault);
    m.def(
        "theta_mu",
        [](const GroupPresentation& p, const Representation& rho) {
            if (!p.meridian) throw MissingPeripheralData("presentation has no meridian");
            return theta_mu(rho, *p.meridian);
        },
        py::arg("presentation"), py::arg("representation"));
    m.def(
        "cohomology_dims",
        [](const GroupPresentation& p, const Representation& rho, double tol) {
            const CohomologySummary s = twisted_cohomology(twisted_complex(p, rho), tol);
            return py::make_tuple(s.b0, s.b1, s.b2);
        },
        py::arg("presentation"), py::arg("representation"), py::arg("rank_tol") = kRankTolDefault);
    m.def(
        "is_regular",
        [](const GroupPresentation& p, const Representation& rho, double tol) {
            return is_regular(twisted_complex(p, rho), tol);
        },
        py::arg("presentation"), py::arg("representation"), py::arg("rank_tol") = kRankTolDefault);

    m.def(
        "torsion_raw",
        [](const std::vector<int>& dims,
           const std::vector<std::vector<std::vector<double>>>& boundaries,
           const std::vector<std::vector<std::vector<double>>>& homology_bases, double tol) {
            const BasedChainComplex c = complex_from_lists(dims, boundaries, homology_bases);
            validate_complex(c, tol);
            const TorsionResult r = sign_determined_torsion(c, tol);
            py::dict out;
            out["value"] = r.value;
            out["tor"] = r.tor;
            out["sign_exponent"] = r.sign_exponent;
            out["alpha"] = r.alpha;
            out["beta"] = r.beta;
            return out;
        },
        py::arg("dims"), py::arg("boundaries"), py::arg("homology_bases") =
            std::vector<std::vector<std::vector<double>>>{},
        py::arg("rank_tol") = kRankTolDefault);

    m.def(
        "scan_torus",
        [](int q, int l, const std::vector<double>& grid, double h, double tol) {
            py::list rows;
            for (const ScanRow& r : scan_torus(q, l, grid, h, tol)) {
                py::dict d;
                d["t"] = r.t;
                d["theta_m"] = r.theta_m;
                d["tor"] = r.tor;
                d["dtheta_dt"] = r.dtheta_dt;
                d["tau_form"] = r.tau_form;
                d["closed_form"] = r.closed_form;
                d["abs_err"] = r.abs_err;
                rows.append(std::move(d));
            }
            return rows;
        },
        py::arg("q"), py::arg("l"), py::arg("grid"), py::arg("fd_step") = 1e-5,
        py::arg("rank_tol") = kRankTolDefault);

    m.def(
        "run_checks",
        [](const std::vector<std::string>& names, int trials, unsigned long long seed) {
            py::list out;
            for (const CheckReport& r : run_checks(names, trials, seed)) {
                py::dict d;
                d["name"] = r.name;
                d["trials"] = r.trials;
                d["seed"] = r.seed;
                d["max_err"] = r.max_err;
                d["tolerance"] = r.tolerance;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("names"), py::arg("trials") = 200, py::arg("seed") = 12345);
    m.def("all_check_names", &all_check_names);
}
