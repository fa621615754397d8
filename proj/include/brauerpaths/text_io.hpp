#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "brauerpaths/diagrams.hpp"
#include "brauerpaths/paths.hpp"
#include "brauerpaths/tile_bijection.hpp"

namespace brauerpaths {

/// Structured records used by the CLI's `--format records` mode.
nlohmann::json path_record(const OverhangPath& p);
nlohmann::json diagram_record(const BrauerDiagram& d);
nlohmann::json delta_trace_record(const DeltaTrace& t);

/// Text-to-text conversion backing `map DIRECTION INPUT`; one output line
/// per returned string. Directions: psi, phi, simple, simple-inverse, tl.
std::vector<std::string> map_direction(const std::string& direction, const std::string& input);

}  // namespace brauerpaths
