#include <doctest.h>

#include <string>
#include <vector>

#include "brauerpaths/render.hpp"
#include "brauerpaths/tile_bijection.hpp"

using namespace brauerpaths;

namespace {

// Minimal well-formedness scan: tags balance and nest properly.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag.front() == '?') continue;  // prolog
        if (tag.front() == '/') {
            if (stack.empty()) return false;
            if (stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        bool self_closing = tag.back() == '/';
        std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
        if (!self_closing) stack.push_back(name);
    }
    return stack.empty();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("path render has one line per step") {
    auto p = parse_path("12'1222");
    RenderSpec spec;
    auto svg = render_path_svg(p, spec);
    CHECK(xml_well_formed(svg));
    CHECK(count_occurrences(svg, "<line") == p.steps().size() + 1);  // steps + axis
    CHECK(count_occurrences(svg, "stroke=\"black\"") == p.steps().size());

    spec.kind = RenderSpec::Kind::PathTiling;
    auto tiled = render_path_tiling_svg(p, spec);
    CHECK(xml_well_formed(tiled));
    // n shaded half-tiles plus one outline per diamond
    CHECK(count_occurrences(tiled, "<polygon") ==
          static_cast<std::size_t>(p.degree()) +
              static_cast<std::size_t>(tiles_of(p).diamond_count()));
    CHECK(count_occurrences(tiled, "fill=\"#ccd\"") == static_cast<std::size_t>(p.degree()));
}

TEST_CASE("diagram render carries arcs, vertices, labels") {
    auto d = parse_diagram("1-4,2-3");
    RenderSpec spec;
    spec.kind = RenderSpec::Kind::Diagram;
    spec.labels = true;
    auto svg = render_diagram_svg(d, spec);
    CHECK(xml_well_formed(svg));
    CHECK(count_occurrences(svg, "<path") == 2);    // one arc each
    CHECK(count_occurrences(svg, "<circle") == 4);  // 2n vertices
    for (const char* label : {">1R<", ">1L<", ">2R<", ">2L<"})
        CHECK(svg.find(label) != std::string::npos);

    spec.labels = false;
    auto plain = render_diagram_svg(d, spec);
    CHECK(count_occurrences(plain, "<text") == 0);
}

TEST_CASE("side-by-side groups path and diagram") {
    auto p = parse_path("12'1222");
    RenderSpec spec;
    spec.kind = RenderSpec::Kind::SideBySide;
    auto svg = render_side_by_side_svg(p, psi(p), spec);
    CHECK(xml_well_formed(svg));
    CHECK(count_occurrences(svg, "<g ") == 2);
    CHECK(count_occurrences(svg, "<circle") == 4);
    CHECK(count_occurrences(svg, "stroke=\"black\"") >= p.steps().size());
}

TEST_CASE("RenderSpec validation") {
    RenderSpec bad;
    bad.scale = 0;
    CHECK_THROWS_AS(render_path_svg(parse_path("12"), bad), ValidationError);
    RenderSpec labelled_path;
    labelled_path.labels = true;
    CHECK_THROWS_AS(render_path_svg(parse_path("12"), labelled_path), ValidationError);

    // structural sanity across everything small
    for (const auto& d : enumerate_diagrams(3)) {
        RenderSpec spec;
        spec.kind = RenderSpec::Kind::Diagram;
        spec.labels = true;
        auto svg = render_diagram_svg(d, spec);
        CHECK(xml_well_formed(svg));
        CHECK(count_occurrences(svg, "<path") == 3);
        CHECK(count_occurrences(svg, "<circle") == 6);
        CHECK(count_occurrences(svg, "<text") == 9);  // 2 vertex + 1 secondary per arc
    }
}
