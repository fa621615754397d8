#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brauerpaths/hecke_walks.hpp"
#include "brauerpaths/render.hpp"
#include "brauerpaths/simple_bijection.hpp"
#include "brauerpaths/text_io.hpp"
#include "brauerpaths/verify.hpp"

namespace py = pybind11;
namespace bp = brauerpaths;

namespace {

// The python surface trades in the canonical text forms: step words for
// paths, "a-b,c-d" pair lists for diagrams.
std::string map_text(const std::string& direction, const std::string& input) {
    auto lines = bp::map_direction(direction, input);
    return lines.front();
}

py::dict trace_dict(const std::string& pairs) {
    auto trace = bp::delta_trace(bp::parse_diagram(pairs));
    py::dict out;
    out["pairs"] = bp::format_diagram(trace.source);
    out["target"] = bp::format_diagram(trace.target);
    out["X"] = trace.displacement;
    out["order"] = trace.move_order;
    return out;
}

bp::WalkModuleAction build_module(const std::string& shape_rows, const std::vector<int>& charges,
                                  bool nonneg_only) {
    bp::MultiShape shape;
    std::size_t start = 0;
    while (start <= shape_rows.size()) {
        auto comma = shape_rows.find(',', start);
        std::string part = shape_rows.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!part.empty()) shape.components.push_back({std::stoi(part)});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (nonneg_only)
        return bp::build_walk_module(shape, charges, [](const bp::StandardTableau& t) {
            return bp::walk_of(t).min_height() >= 0;
        });
    return bp::build_walk_module(shape, charges);
}

}  // namespace

PYBIND11_MODULE(brauerpaths, m) {
    m.doc() = "Bijections between Brauer diagrams and overhang lattice paths, plus Hecke "
              "walk modules";

    py::register_exception<bp::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<bp::ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("parse_path", [](const std::string& w) { return bp::format_path(bp::parse_path(w)); },
          "Validate a step word and return its canonical form");
    m.def("path_lvector",
          [](const std::string& w) { return bp::path_to_lvector(bp::parse_path(w)).values; });
    m.def("lvector_path", [](const std::vector<int>& l) {
        return bp::format_path(bp::lvector_to_path(bp::LVector{l}));
    });
    m.def("root_dyck",
          [](const std::string& w) { return bp::format_path(bp::root_dyck(bp::parse_path(w))); });
    m.def("stack_lengths",
          [](const std::string& w) { return bp::stack_lengths(bp::parse_path(w)); });
    m.def("enumerate_paths", [](int n) {
        std::vector<std::string> out;
        for (const auto& p : bp::enumerate_paths(n)) out.push_back(bp::format_path(p));
        return out;
    });
    m.def("enumerate_diagrams", [](int n) {
        std::vector<std::string> out;
        for (const auto& d : bp::enumerate_diagrams(n)) out.push_back(bp::format_diagram(d));
        return out;
    });
    m.def("is_tl", [](const std::string& d) { return bp::is_tl(bp::parse_diagram(d)); });
    m.def("tl_projection", [](const std::string& d) {
        return bp::format_diagram(bp::tl_projection(bp::parse_diagram(d)));
    });
    m.def("secondary_labels",
          [](const std::string& d) { return bp::secondary_labels(bp::parse_diagram(d)); });

    m.def("psi", [](const std::string& w) { return map_text("psi", w); },
          "Tile bijection: path word -> pair list");
    m.def("phi", [](const std::string& d) { return map_text("phi", d); },
          "Inverse tile bijection: pair list -> path word");
    m.def("simple_bijection", [](const std::string& d) { return map_text("simple", d); });
    m.def("simple_bijection_inverse",
          [](const std::string& w) { return map_text("simple-inverse", w); });
    m.def("delta_trace", &trace_dict, "Displacements carrying a diagram to its TL projection");

    m.def("render_path_svg", [](const std::string& w, double scale, bool tiling) {
        bp::RenderSpec spec;
        spec.scale = scale;
        return tiling ? bp::render_path_tiling_svg(bp::parse_path(w), spec)
                      : bp::render_path_svg(bp::parse_path(w), spec);
    }, py::arg("word"), py::arg("scale") = 40.0, py::arg("tiling") = false);
    m.def("render_diagram_svg", [](const std::string& d, double scale, bool labels) {
        bp::RenderSpec spec;
        spec.kind = bp::RenderSpec::Kind::Diagram;
        spec.scale = scale;
        spec.labels = labels;
        return bp::render_diagram_svg(bp::parse_diagram(d), spec);
    }, py::arg("pairs"), py::arg("scale") = 40.0, py::arg("labels") = false);

    py::class_<bp::WalkModuleAction>(m, "WalkModule")
        .def_property_readonly("dim",
                               [](const bp::WalkModuleAction& a) { return a.basis.size(); })
        .def_property_readonly("basis", &bp::WalkModuleAction::basis_names)
        .def_property_readonly("charge_offset", &bp::WalkModuleAction::charge_offset)
        .def("generator",
             [](const bp::WalkModuleAction& a, int i) {
                 const auto& g = bp::generator_matrix(a, i);
                 std::vector<std::vector<std::string>> rows;
                 for (int r = 0; r < g.size(); ++r) {
                     std::vector<std::string> row;
                     for (int c = 0; c < g.size(); ++c) row.push_back(g.at(r, c).to_string());
                     rows.push_back(std::move(row));
                 }
                 return rows;
             },
             "Matrix of g_i as canonical-form strings")
        .def("relations_ok",
             [](const bp::WalkModuleAction& a) { return bp::verify_relations(a).all_pass(); })
        .def("leaks",
             [](const bp::WalkModuleAction& a, const std::vector<int>& subset_indices,
                int root_order) {
                 std::vector<bool> subset(a.basis.size(), false);
                 for (int k : subset_indices) subset[static_cast<std::size_t>(k)] = true;
                 auto report = bp::decoupling_report(
                     a, subset,
                     root_order > 0 ? std::optional<int>(root_order) : std::nullopt);
                 py::list out;
                 for (const auto& leak : report.leaks) {
                     py::dict entry;
                     entry["generator"] = leak.generator;
                     entry["from"] = leak.from;
                     entry["to"] = leak.to;
                     entry["coeff"] = leak.coeff.to_string();
                     if (leak.valuation_at_root) entry["valuation"] = *leak.valuation_at_root;
                     out.append(entry);
                 }
                 return out;
             },
             py::arg("subset_indices"), py::arg("root_order") = 0);

    m.def("walk_module", &build_module, py::arg("shape"), py::arg("charges"),
          py::arg("nonneg_only") = false,
          "Build the Hecke action on one-row component tableaux, e.g. walk_module('2,2', [2, 0])");

    m.def("qint", [](int h) { return bp::qint(h).to_string(); },
          "Balanced quantum integer [h] as a canonical-form string");

    m.def("verify", [](const std::string& which, int n_min, int n_max) {
        bp::CheckResult r;
        if (which == "roundtrip") r = bp::verify_roundtrip(n_min, n_max);
        else if (which == "counts") r = bp::verify_counts(n_min, n_max);
        else if (which == "tl-restriction") r = bp::verify_tl_restriction(n_min, n_max);
        else if (which == "homomorphism") r = bp::verify_homomorphism(n_max);
        else if (which == "hecke") r = bp::verify_hecke(n_max);
        else throw bp::ValidationError("unknown suite '" + which + "'");
        return py::make_tuple(r.pass, r.line());
    }, py::arg("which"), py::arg("n_min") = 1, py::arg("n_max") = 4);
}
