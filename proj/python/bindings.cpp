#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nullsurf/curve.hpp"
#include "nullsurf/errors.hpp"
#include "nullsurf/export.hpp"
#include "nullsurf/expr.hpp"
#include "nullsurf/presets.hpp"
#include "nullsurf/scene.hpp"
#include "nullsurf/surface.hpp"

namespace py = pybind11;

namespace {

using namespace nullsurf;

py::tuple vec_tuple(const MVec3& v) { return py::make_tuple(v.c0, v.c1, v.c2); }

int pick_samples(const Scene& sc, int samples) { return samples > 0 ? samples : sc.samples; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "surface families through a common null asymptotic curve";

    py::register_exception<Error>(m, "NullsurfError");

    py::class_<VerificationItem>(m, "VerificationItem")
        .def_readonly("id", &VerificationItem::id)
        .def_readonly("passed", &VerificationItem::passed)
        .def_readonly("max_defect", &VerificationItem::max_defect)
        .def_readonly("mean_defect", &VerificationItem::mean_defect)
        .def_readonly("worst_s", &VerificationItem::worst_s)
        .def_readonly("tolerance", &VerificationItem::tolerance)
        .def_readonly("detail", &VerificationItem::detail)
        .def_property_readonly("severity",
                               [](const VerificationItem& it) { return to_string(it.severity); })
        .def("__repr__", [](const VerificationItem& it) {
            return "<VerificationItem " + it.id + (it.passed ? " ok>" : " FAIL>");
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("items", &VerificationReport::items)
        .def("overall_pass", &VerificationReport::overall_pass)
        .def(
            "find",
            [](const VerificationReport& rep, const std::string& id) { return rep.find(id); },
            py::arg("id"), py::return_value_policy::reference_internal,
            "Item with the given id, or None.")
        .def("render", &VerificationReport::render)
        .def("__repr__", [](const VerificationReport& rep) {
            return std::string("<VerificationReport ") +
                   (rep.overall_pass() ? "PASS" : "FAIL") + ", " +
                   std::to_string(rep.items.size()) + " items>";
        });

    py::class_<ResidualSample>(m, "ResidualSample")
        .def_readonly("s", &ResidualSample::s)
        .def_readonly("phi1", &ResidualSample::phi1)
        .def_readonly("phi2", &ResidualSample::phi2)
        .def_readonly("phi3", &ResidualSample::phi3)
        .def_readonly("r_direct", &ResidualSample::r_direct)
        .def_readonly("r_reduced", &ResidualSample::r_reduced)
        .def_readonly("null_defect", &ResidualSample::null_defect)
        .def_readonly("normal_norm", &ResidualSample::normal_norm);

    py::class_<Scene>(m, "Scene")
        .def_readonly("samples", &Scene::samples)
        .def_property_readonly("s_domain",
                               [](const Scene& sc) {
                                   return py::make_tuple(sc.member.curve.s_min,
                                                         sc.member.curve.s_max);
                               })
        .def_property_readonly("t_domain",
                               [](const Scene& sc) {
                                   return py::make_tuple(sc.member.ms.t_lo, sc.member.ms.t_hi);
                               })
        .def_property_readonly("t0", [](const Scene& sc) { return sc.member.ms.t0; })
        .def_property_readonly("grid", [](const Scene& sc) {
            return py::make_tuple(sc.member.n_s, sc.member.n_t);
        });

    m.def("load_scene", &load_scene, py::arg("path"), "Load and validate a scene file.");
    m.def(
        "parse_scene",
        [](const std::string& text, const std::string& origin) {
            return parse_scene(text, origin);
        },
        py::arg("text"), py::arg("origin") = "<string>",
        "Parse and validate scene JSON from a string.");

    m.def(
        "preset_names",
        []() {
            std::vector<std::string> names;
            for (const Preset& p : presets()) names.push_back(p.name);
            return names;
        },
        "Names of the built-in example scenes.");
    m.def(
        "preset",
        [](const std::string& name) {
            const Preset* p = find_preset(name);
            if (!p) throw Error("unknown preset '" + name + "'");
            return preset_scene(*p);
        },
        py::arg("name"), "Scene for a built-in preset.");

    m.def(
        "evaluate_curve",
        [](const Scene& sc, double s) { return vec_tuple(evaluate_curve(sc.member.curve, s)); },
        py::arg("scene"), py::arg("s"), "Point on the base curve.");
    m.def(
        "evaluate_surface",
        [](const Scene& sc, double s, double t) {
            return vec_tuple(evaluate_surface(sc.member, s, t));
        },
        py::arg("scene"), py::arg("s"), py::arg("t"), "Point on the surface family member.");

    m.def(
        "check_curve",
        [](const Scene& sc, int samples) {
            int n = pick_samples(sc, samples);
            VerificationReport rep = validate_frame(sc.member.curve, n, sc.tol);
            rep.items.insert(rep.items.begin(), check_null(sc.member.curve, n, sc.tol.null));
            return rep;
        },
        py::arg("scene"), py::arg("samples") = 0,
        "Null curve check plus frame identity checks.");
    m.def(
        "verify",
        [](const Scene& sc, int samples) {
            return verify_member(sc.member, pick_samples(sc, samples), sc.tol);
        },
        py::arg("scene"), py::arg("samples") = 0,
        "Full verification of the surface family member.");
    m.def(
        "residual_scan",
        [](const Scene& sc, int samples) {
            return asymptotic_residual(sc.member, pick_samples(sc, samples), sc.tol);
        },
        py::arg("scene"), py::arg("samples") = 0,
        "Residual sweep along t = t0; requires the isoparametric condition.");

    m.def(
        "build_obj",
        [](const Scene& sc, const std::string& path) {
            ObjCounts c = export_obj(sc.member, path);
            return py::make_tuple(c.surface_vertices, c.curve_vertices, c.faces);
        },
        py::arg("scene"), py::arg("path"),
        "Write the sampled mesh as OBJ; returns (surface_vertices, curve_vertices, faces).");

    m.def(
        "eval_expr",
        [](const std::string& text, double s, double t) { return eval(*parse(text), s, t); },
        py::arg("text"), py::arg("s") = 0.0, py::arg("t") = 0.0,
        "Evaluate an expression in the scene expression language.");
}
