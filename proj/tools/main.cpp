#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "brauerpaths/hecke_walks.hpp"
#include "brauerpaths/render.hpp"
#include "brauerpaths/simple_bijection.hpp"
#include "brauerpaths/text_io.hpp"
#include "brauerpaths/verify.hpp"

namespace bp = brauerpaths;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string file;

    int run(const std::function<void(std::ostream&)>& body) const {
        if (file.empty()) {
            body(std::cout);
        } else {
            std::ofstream out(file);
            if (!out) throw bp::ValidationError("cannot open output file " + file);
            body(out);
        }
        return kExitPass;
    }
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

// Shape grammar: components separated by ',', rows inside a component by '.'
// ("2,2" is two one-row components; "2.1" is one component with rows 2,1).
bp::MultiShape parse_shape(const std::string& text) {
    bp::MultiShape shape;
    std::stringstream comps(text);
    std::string comp;
    while (std::getline(comps, comp, ',')) {
        std::vector<int> rows;
        std::stringstream rs(comp);
        std::string row;
        while (std::getline(rs, row, '.')) rows.push_back(std::stoi(row));
        shape.components.push_back(std::move(rows));
    }
    shape.validate();
    return shape;
}

std::vector<int> parse_charges(const std::string& text, std::size_t components) {
    std::vector<int> charges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) charges.push_back(std::stoi(item));
    if (charges.size() != components)
        throw bp::ValidationError("need one charge per shape component");
    return charges;
}

int cmd_enumerate(const std::string& kind, int n, int bound, const std::string& format,
                  const Output& out) {
    if (n < 0 || n > bound) {
        std::cerr << "error: --n " << n << " exceeds the enumeration bound " << bound
                  << " (raise with --bound)\n";
        return kExitUsage;
    }
    return out.run([&](std::ostream& os) {
        long long count = 0;
        if (kind == "paths") {
            for (const auto& p : bp::enumerate_paths(n)) {
                ++count;
                os << (format == "records" ? bp::path_record(p).dump() : bp::format_path(p))
                   << "\n";
            }
        } else {
            for (const auto& d : bp::enumerate_diagrams(n)) {
                ++count;
                os << (format == "records" ? bp::diagram_record(d).dump() : bp::format_diagram(d))
                   << "\n";
            }
        }
        if (format == "records")
            os << nlohmann::json{{"count", count}}.dump() << "\n";
        else
            os << "count " << count << "\n";
    });
}

std::string join_ints(const std::vector<int>& values) {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text += ',';
        text += std::to_string(values[i]);
    }
    return text;
}

int cmd_map(const std::string& direction, const std::string& input, bool trace,
            const std::string& format, const Output& out) {
    return out.run([&](std::ostream& os) {
        if (trace && (direction == "simple" || direction == "simple-inverse")) {
            bp::BrauerDiagram d = direction == "simple"
                                      ? bp::parse_diagram(input)
                                      : bp::simple_bijection_inverse(bp::parse_path(input));
            auto tuple = bp::kappa(d);
            os << "tuple " << join_ints(tuple.x) << "\n";
            os << "grid " << join_ints(bp::tuple_to_grid(tuple).vertical_xs) << "\n";
        } else if (trace) {
            bp::BrauerDiagram d = (direction == "psi") ? bp::psi(bp::parse_path(input))
                                                       : bp::parse_diagram(input);
            os << bp::delta_trace_record(bp::delta_trace(d)).dump() << "\n";
        }
        for (const auto& line : bp::map_direction(direction, input)) {
            if (format == "records") {
                // re-parse to decide which record shape the line carries
                try {
                    os << bp::diagram_record(bp::parse_diagram(line)).dump() << "\n";
                } catch (const std::exception&) {
                    os << bp::path_record(bp::parse_path(line)).dump() << "\n";
                }
            } else {
                os << line << "\n";
            }
        }
    });
}

int cmd_verify(const std::string& which, std::pair<int, int> range, int jobs,
               std::uint64_t seed, int samples, const Output& out) {
    bp::CheckResult result;
    if (which == "roundtrip")
        result = bp::verify_roundtrip(range.first, range.second, jobs, seed, samples);
    else if (which == "counts")
        result = bp::verify_counts(range.first, range.second, jobs);
    else if (which == "tl-restriction")
        result = bp::verify_tl_restriction(range.first, range.second, jobs);
    else if (which == "homomorphism")
        result = bp::verify_homomorphism(range.second, jobs);
    else
        result = bp::verify_hecke(range.second, jobs);
    out.run([&](std::ostream& os) { os << result.line() << "\n"; });
    return result.pass ? kExitPass : kExitVerifyFail;
}

int cmd_render(const std::string& kind, const std::string& input, double scale, bool labels,
               const Output& out) {
    bp::RenderSpec spec;
    spec.scale = scale;
    spec.labels = labels;
    std::string svg;
    if (kind == "path") {
        spec.kind = bp::RenderSpec::Kind::Path;
        svg = bp::render_path_svg(bp::parse_path(input), spec);
    } else if (kind == "tiling") {
        spec.kind = bp::RenderSpec::Kind::PathTiling;
        svg = bp::render_path_tiling_svg(bp::parse_path(input), spec);
    } else if (kind == "diagram") {
        spec.kind = bp::RenderSpec::Kind::Diagram;
        svg = bp::render_diagram_svg(bp::parse_diagram(input), spec);
    } else {
        spec.kind = bp::RenderSpec::Kind::SideBySide;
        auto p = bp::parse_path(input);
        svg = bp::render_side_by_side_svg(p, bp::psi(p), spec);
    }
    return out.run([&](std::ostream& os) { os << svg; });
}

int cmd_hecke(const std::string& shape_text, const std::string& charges_text, bool matrices,
              bool relations, const std::string& decouple, std::optional<int> root_order,
              const Output& out) {
    bp::MultiShape shape = parse_shape(shape_text);
    std::vector<int> charges = parse_charges(charges_text, shape.components.size());

    const bool walks_shape = shape.components.size() == 2 &&
                             shape.components[0].size() == 1 && shape.components[1].size() == 1;
    bp::WalkModuleAction action =
        (walks_shape && charges[0] - charges[1] == 1)
            ? bp::build_walk_module(shape, charges,
                                    [](const bp::StandardTableau& t) {
                                        return bp::walk_of(t).min_height() >= 0;
                                    })
            : bp::build_walk_module(shape, charges);

    bool pass = true;
    out.run([&](std::ostream& os) {
        os << "shape " << shape.to_string() << "  dim " << action.basis.size() << "\n";
        auto names = action.basis_names();
        os << "basis";
        for (const auto& name : names) os << " " << name;
        os << "\n";
        if (walks_shape && charges[0] - charges[1] == 1)
            os << "note: offset 1, using the nonnegative-walk submodule\n";

        if (matrices) {
            for (std::size_t i = 1; i <= action.generators.size(); ++i) {
                os << "g" << i << ":\n";
                const auto& g = bp::generator_matrix(action, static_cast<int>(i));
                for (int r = 0; r < g.size(); ++r) {
                    for (int c = 0; c < g.size(); ++c)
                        os << (c ? " | " : "  ") << g.at(r, c).to_string();
                    os << "\n";
                }
            }
        }
        if (relations) {
            auto report = bp::verify_relations(action);
            for (const auto& check : report.checks)
                os << "relation " << check.name << " " << (check.pass ? "PASS" : "FAIL") << "\n";
            if (!report.all_pass()) pass = false;
        }
        if (!decouple.empty()) {
            std::vector<bool> subset;
            if (decouple == "nonneg") {
                subset = bp::subset_nonnegative_walks(action);
            } else if (decouple.rfind("height<=", 0) == 0) {
                subset = bp::subset_max_height(action, std::stoi(decouple.substr(8)));
            } else if (decouple.rfind("exclude:", 0) == 0) {
                subset = bp::subset_excluding_walk(action, decouple.substr(8));
            } else {
                throw bp::ValidationError("unknown subset '" + decouple +
                                          "' (use nonneg, height<=H, exclude:WORD)");
            }
            auto report = bp::decoupling_report(action, subset, root_order);
            os << "subset";
            for (std::size_t k = 0; k < subset.size(); ++k)
                if (subset[k]) os << " " << names[k];
            os << "\n";
            if (report.invariant()) {
                os << "invariant: all outgoing coefficients are the zero function\n";
            } else {
                for (const auto& leak : report.leaks) {
                    os << "leak g" << leak.generator << " "
                       << names[static_cast<std::size_t>(leak.from)] << " -> "
                       << names[static_cast<std::size_t>(leak.to)] << "  coeff "
                       << leak.coeff.to_string();
                    if (leak.valuation_at_root)
                        os << "  valuation@root(" << *root_order << ") "
                           << *leak.valuation_at_root
                           << (*leak.valuation_at_root < 0 ? "  POLE" : "");
                    os << "\n";
                }
            }
        }
    });
    return pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer diagrams, overhang paths, and the bijections between them"};
    app.require_subcommand(1);

    std::string format = "text", out_file, input, n_text = "1..5";
    int n = 0, bound = 7, jobs = 1, samples = 10000;
    std::uint64_t seed = 12345;
    double scale = 40.0;
    bool labels = false, trace = false;

    auto* enumerate = app.add_subcommand("enumerate", "List paths or diagrams of a degree");
    std::string enum_kind;
    enumerate->add_option("kind", enum_kind)->required()->check(CLI::IsMember({"paths", "diagrams"}));
    enumerate->add_option("--n", n, "Degree")->required();
    enumerate->add_option("--bound", bound, "Enumeration bound (default 7)");
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
    enumerate->add_option("--out", out_file, "Write to file instead of stdout");

    auto* map = app.add_subcommand("map", "Apply a bijection to one object");
    std::string map_direction;
    map->add_option("direction", map_direction)
        ->required()
        ->check(CLI::IsMember({"psi", "phi", "simple", "simple-inverse", "tl"}));
    map->add_option("input", input, "Path word or pair list")->required();
    map->add_flag("--trace", trace, "Also print the delta trace record");
    map->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
    map->add_option("--out", out_file);

    auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
    std::string verify_which;
    verify->add_option("which", verify_which)
        ->required()
        ->check(CLI::IsMember({"roundtrip", "counts", "tl-restriction", "homomorphism", "hecke"}));
    verify->add_option("--n", n_text, "Degree or range MIN..MAX (default 1..5)");
    verify->add_option("--jobs", jobs, "Worker threads");
    verify->add_option("--seed", seed, "Seed for sampled checks at n >= 6");
    verify->add_option("--samples", samples, "Sample count per side at n >= 6");
    verify->add_option("--bound", bound, "Range bound (default 7)");
    verify->add_option("--out", out_file);

    auto* render = app.add_subcommand("render", "Render an object as SVG");
    std::string render_kind;
    render->add_option("kind", render_kind)
        ->required()
        ->check(CLI::IsMember({"path", "tiling", "diagram", "side-by-side"}));
    render->add_option("input", input, "Path word or pair list")->required();
    render->add_option("--scale", scale, "Pixels per lattice unit");
    render->add_flag("--labels", labels, "Draw arc labels (diagram kinds)");
    render->add_option("--out", out_file);

    auto* hecke = app.add_subcommand("hecke", "Walk modules: matrices, relations, decoupling");
    std::string shape_text = "2,2", charges_text = "2,0", decouple;
    bool matrices = false, relations = false;
    int root_order = 0;
    hecke->add_option("--shape", shape_text,
                      "Components ',' separated, rows '.' separated (default 2,2)");
    hecke->add_option("--x", charges_text, "Charges, one per component (default 2,0)");
    hecke->add_flag("--matrices", matrices, "Print the generator matrices");
    hecke->add_flag("--relations", relations, "Check quadratic/braid/commutation exactly");
    hecke->add_option("--decouple", decouple, "Subset: nonneg, height<=H, exclude:WORD");
    hecke->add_option("--root-order", root_order,
                      "Report coefficient valuations at a primitive root of unity");
    hecke->add_option("--out", out_file);

    CLI11_PARSE(app, argc, argv);

    try {
        Output out{out_file};
        if (*enumerate) return cmd_enumerate(enum_kind, n, bound, format, out);
        if (*map) return cmd_map(map_direction, input, trace, format, out);
        if (*verify) {
            auto range = parse_range(n_text);
            if (range.first < 0 || range.second > bound || range.first > range.second) {
                std::cerr << "error: range " << n_text << " outside 0.." << bound << "\n";
                return kExitUsage;
            }
            return cmd_verify(verify_which, range, jobs, seed, samples, out);
        }
        if (*render) return cmd_render(render_kind, input, scale, labels, out);
        if (*hecke) {
            if (!relations && !matrices && decouple.empty()) relations = true;
            return cmd_hecke(shape_text, charges_text, matrices, relations, decouple,
                             root_order > 0 ? std::optional<int>(root_order) : std::nullopt, out);
        }
    } catch (const bp::ParseError& e) {
        std::cerr << "parse error: " << e.what();
        if (e.position() != bp::ParseError::npos) std::cerr << " (at offset " << e.position() << ")";
        std::cerr << "\n";
        return kExitUsage;
    } catch (const bp::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
