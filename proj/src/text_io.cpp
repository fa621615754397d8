#include "brauerpaths/text_io.hpp"

#include "brauerpaths/simple_bijection.hpp"

namespace brauerpaths {

nlohmann::json path_record(const OverhangPath& p) {
    return {{"degree", p.degree()},
            {"word", format_path(p)},
            {"lvector", path_to_lvector(p).values}};
}

nlohmann::json diagram_record(const BrauerDiagram& d) {
    std::vector<std::pair<int, int>> pairs;
    for (const Arc& a : d.arcs()) pairs.emplace_back(a.left + 1, a.right + 1);
    return {{"n", d.degree()}, {"pairs", pairs}};
}

nlohmann::json delta_trace_record(const DeltaTrace& t) {
    std::vector<std::pair<int, int>> pairs;
    for (const Arc& a : t.source.arcs()) pairs.emplace_back(a.left + 1, a.right + 1);
    return {{"pairs", pairs}, {"X", t.displacement}, {"order", t.move_order}};
}

std::vector<std::string> map_direction(const std::string& direction, const std::string& input) {
    if (direction == "psi") return {format_diagram(psi(parse_path(input)))};
    if (direction == "phi") return {format_path(phi(parse_diagram(input)))};
    if (direction == "simple") return {format_path(simple_bijection(parse_diagram(input)))};
    if (direction == "simple-inverse")
        return {format_diagram(simple_bijection_inverse(parse_path(input)))};
    if (direction == "tl") {
        auto pi = tl_projection(parse_diagram(input));
        return {format_diagram(pi), format_path(phi_tl(pi))};
    }
    throw ValidationError("unknown map direction '" + direction + "'");
}

}  // namespace brauerpaths
