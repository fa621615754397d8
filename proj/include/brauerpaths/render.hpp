#pragma once

#include <string>

#include "brauerpaths/diagrams.hpp"
#include "brauerpaths/paths.hpp"

namespace brauerpaths {

/// SVG rendering knobs. `scale` is pixels per lattice unit; `labels` adds
/// right-standard kL/kR vertex labels plus secondary labels on arcs and is
/// only meaningful for diagram renders.
struct RenderSpec {
    enum class Kind { Path, PathTiling, Diagram, SideBySide };

    Kind kind = Kind::Path;
    double scale = 40.0;
    bool labels = false;
};

/// A path as one <line> element per step.
std::string render_path_svg(const OverhangPath& p, const RenderSpec& spec);
/// Path plus its lower-region tiling: diamond outlines and shaded base
/// half-diamonds.
std::string render_path_tiling_svg(const OverhangPath& p, const RenderSpec& spec);
/// Vertices on a baseline with one arc <path> per pair, drawn below.
std::string render_diagram_svg(const BrauerDiagram& d, const RenderSpec& spec);
/// Path (with tiling) and diagram side by side in one SVG, two <g> groups.
std::string render_side_by_side_svg(const OverhangPath& p, const BrauerDiagram& d,
                                    const RenderSpec& spec);

}  // namespace brauerpaths
