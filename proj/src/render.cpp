#include "brauerpaths/render.hpp"

#include <algorithm>
#include <sstream>

namespace brauerpaths {

namespace {

struct SvgWriter {
    std::ostringstream body;
    double width = 0, height = 0;

    std::string finish() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

constexpr double kMargin = 12.0;

// Lattice y points up, SVG y points down.
struct Frame {
    double scale;
    double x0;
    double y_top;  // lattice y mapped to svg kMargin

    double x(double lx) const { return x0 + lx * scale; }
    double y(double ly) const { return kMargin + (y_top - ly) * scale; }
};

int max_path_height(const OverhangPath& p) {
    int top = 1;
    for (auto [x, y] : p.vertices()) top = std::max(top, y);
    return top;
}

void emit_path_lines(SvgWriter& svg, const OverhangPath& p, const Frame& f) {
    auto verts = p.vertices();
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        svg.body << "  <line x1=\"" << f.x(verts[i].first) << "\" y1=\"" << f.y(verts[i].second)
                 << "\" x2=\"" << f.x(verts[i + 1].first) << "\" y2=\""
                 << f.y(verts[i + 1].second)
                 << "\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
    }
    svg.body << "  <line x1=\"" << f.x(0) << "\" y1=\"" << f.y(0) << "\" x2=\""
             << f.x(2 * p.degree()) << "\" y2=\"" << f.y(0)
             << "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"3 3\"/>\n";
}

void emit_tiling(SvgWriter& svg, const OverhangPath& p, const Frame& f) {
    // shaded base half-diamonds, then diamond outlines
    for (int k = 1; k <= p.degree(); ++k) {
        double bx = 2 * k - 2;
        svg.body << "  <polygon points=\"" << f.x(bx) << "," << f.y(0) << " " << f.x(bx + 1) << ","
                 << f.y(1) << " " << f.x(bx + 2) << "," << f.y(0)
                 << "\" fill=\"#ccd\" stroke=\"#667\" stroke-width=\"1\"/>\n";
    }
    for (auto [a, b] : tiles_of(p).diamond_bottoms()) {
        svg.body << "  <polygon points=\"" << f.x(a) << "," << f.y(b) << " " << f.x(a + 1) << ","
                 << f.y(b + 1) << " " << f.x(a) << "," << f.y(b + 2) << " " << f.x(a - 1) << ","
                 << f.y(b + 1) << "\" fill=\"none\" stroke=\"#667\" stroke-width=\"1\"/>\n";
    }
}

void check_spec(const RenderSpec& spec, bool diagram_kind) {
    if (spec.scale <= 0) throw ValidationError("render scale must be positive");
    if (spec.labels && !diagram_kind)
        throw ValidationError("labels are only available for diagram renders");
}

void emit_diagram(SvgWriter& svg, const BrauerDiagram& d, const Frame& f, bool labels) {
    for (const Arc& a : d.arcs()) {
        double rx = (a.right - a.left) / 2.0;
        double ry = std::min(1.0 + rx / 2.0, 3.0);
        svg.body << "  <path d=\"M " << f.x(a.left) << " " << f.y(0) << " A " << rx * f.scale
                 << " " << ry * f.scale / 2.0 << " 0 0 0 " << f.x(a.right) << " " << f.y(0)
                 << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (int pos = 0; pos < d.size(); ++pos) {
        svg.body << "  <circle cx=\"" << f.x(pos) << "\" cy=\"" << f.y(0)
                 << "\" r=\"3\" fill=\"black\"/>\n";
    }
    if (labels) {
        auto right = right_standard_arcs(d);
        auto sec = secondary_labels(d);
        for (std::size_t i = 0; i < right.size(); ++i) {
            const Arc& a = right[i];
            svg.body << "  <text x=\"" << f.x(a.left) << "\" y=\"" << f.y(0.35)
                     << "\" font-size=\"" << f.scale * 0.35 << "\" text-anchor=\"middle\">"
                     << (i + 1) << "L</text>\n";
            svg.body << "  <text x=\"" << f.x(a.right) << "\" y=\"" << f.y(0.35)
                     << "\" font-size=\"" << f.scale * 0.35 << "\" text-anchor=\"middle\">"
                     << (i + 1) << "R</text>\n";
            double mid = (a.left + a.right) / 2.0;
            double dip = std::min(1.0 + (a.right - a.left) / 4.0, 3.0) / 2.0;
            svg.body << "  <text x=\"" << f.x(mid) << "\" y=\"" << f.y(-dip - 0.3)
                     << "\" font-size=\"" << f.scale * 0.35
                     << "\" text-anchor=\"middle\" fill=\"#336\">" << sec[i] << "</text>\n";
        }
    }
}

}  // namespace

std::string render_path_svg(const OverhangPath& p, const RenderSpec& spec) {
    check_spec(spec, false);
    SvgWriter svg;
    int top = max_path_height(p);
    Frame f{spec.scale, kMargin, static_cast<double>(top)};
    svg.width = 2 * kMargin + 2 * p.degree() * spec.scale;
    svg.height = 2 * kMargin + top * spec.scale;
    emit_path_lines(svg, p, f);
    return svg.finish();
}

std::string render_path_tiling_svg(const OverhangPath& p, const RenderSpec& spec) {
    check_spec(spec, false);
    SvgWriter svg;
    int top = max_path_height(p);
    Frame f{spec.scale, kMargin, static_cast<double>(top)};
    svg.width = 2 * kMargin + 2 * p.degree() * spec.scale;
    svg.height = 2 * kMargin + top * spec.scale;
    emit_tiling(svg, p, f);
    emit_path_lines(svg, p, f);
    return svg.finish();
}

std::string render_diagram_svg(const BrauerDiagram& d, const RenderSpec& spec) {
    check_spec(spec, true);
    SvgWriter svg;
    const double depth = 3.5, head = spec.labels ? 0.6 : 0.2;
    Frame f{spec.scale, kMargin, head};
    svg.width = 2 * kMargin + (d.size() - 1) * spec.scale;
    svg.height = 2 * kMargin + (depth + head) * spec.scale;
    emit_diagram(svg, d, f, spec.labels);
    return svg.finish();
}

std::string render_side_by_side_svg(const OverhangPath& p, const BrauerDiagram& d,
                                    const RenderSpec& spec) {
    check_spec(spec, true);
    SvgWriter svg;
    int top = max_path_height(p);
    Frame fp{spec.scale, kMargin, static_cast<double>(top)};
    double path_width = 2 * kMargin + 2 * p.degree() * spec.scale;
    const double depth = 3.5, head = spec.labels ? 0.6 : 0.2;
    Frame fd{spec.scale, path_width + 2 * kMargin, head};
    // align the diagram's baseline with the path's axis
    fd.y_top = head + (fp.y(0) - kMargin) / spec.scale - head;
    svg.width = path_width + 2 * kMargin + (d.size() - 1) * spec.scale + 2 * kMargin;
    svg.height = 2 * kMargin + std::max(static_cast<double>(top), depth + head) * spec.scale +
                 depth * spec.scale;
    svg.body << " <g id=\"path\">\n";
    emit_tiling(svg, p, fp);
    emit_path_lines(svg, p, fp);
    svg.body << " </g>\n <g id=\"diagram\">\n";
    emit_diagram(svg, d, fd, spec.labels);
    svg.body << " </g>\n";
    return svg.finish();
}

}  // namespace brauerpaths
