#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weakdp/endo.hpp"
#include "weakdp/neg_curves.hpp"
#include "weakdp/report.hpp"

namespace py = pybind11;

namespace {

// Reports are JSON documents by construction; hand them to Python through
// the stdlib json module instead of mirroring every struct.
py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_py(const py::dict& d) {
    const std::string dumped =
        py::module_::import("json").attr("dumps")(d).cast<std::string>();
    return nlohmann::json::parse(dumped);
}

wdp::SurfaceModel model_from_dict(const py::dict& script) {
    return wdp::build_from_script(wdp::script_from_json(from_py(script)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "weak del Pezzo surfaces with toric self-maps";

    m.def(
        "classify",
        [](int k2_min, int k2_max) { return to_py(wdp::classify_report(k2_min, k2_max)); },
        py::arg("k2_min") = 3, py::arg("k2_max") = 7);

    m.def(
        "verify",
        [](const py::dict& script, const std::vector<int64_t>& ds) {
            return to_py(wdp::verification_report(wdp::script_from_json(from_py(script)), ds));
        },
        py::arg("script"), py::arg("ds") = std::vector<int64_t>{2, 3});

    m.def("surface", [](const py::dict& script) {
        return to_py(wdp::surface_to_json(model_from_dict(script)));
    });

    m.def("graph_dot",
          [](const py::dict& script) { return wdp::loop_graph_dot(model_from_dict(script)); });
    m.def("graph_ascii",
          [](const py::dict& script) { return wdp::loop_graph_ascii(model_from_dict(script)); });

    m.def("web", [] { return to_py(wdp::web_report()); });

    m.def("normalize_cycle", [](const std::vector<int64_t>& labels) {
        const auto c = wdp::normalize_cycle(wdp::LabelCycle(labels));
        return std::vector<int64_t>(c.labels().begin(), c.labels().end());
    });

    m.def("identify_figure", [](const std::vector<int64_t>& labels) -> py::object {
        const auto fig = wdp::identify_figure(wdp::LabelCycle(labels));
        if (!fig) return py::none();
        return py::int_(*fig);
    });

    m.def("boundary_labels", [](const std::string& seed, const std::vector<int>& blowups) {
        const auto model =
            wdp::build_from_script(wdp::BlowupScript{wdp::parse_seed(seed), blowups, {}});
        const auto c = wdp::dual_graph_cycle(model);
        return std::vector<int64_t>(c.labels().begin(), c.labels().end());
    });

    m.def(
        "negative_class_counts",
        [](int n) {
            const auto set =
                wdp::enumerate_negative_classes(wdp::LatticeSignature::plane(n));
            return py::make_tuple(set.minus_one.size(), set.minus_two.size());
        },
        py::arg("n"));

    m.def(
        "power_map_pullback",
        [](int line_index, int64_t d) {
            const auto p = wdp::power_map_pullback(line_index, d);
            return py::make_tuple(p.line_index, p.multiplicity);
        },
        py::arg("line_index"), py::arg("d"));
}
