#pragma once

#include <vector>

#include "brauerpaths/diagrams.hpp"
#include "brauerpaths/paths.hpp"

namespace brauerpaths {

/// Mixed-radix code for a Brauer diagram: 1 <= x_i < 2i.
struct RadixTuple {
    std::vector<int> x;

    int degree() const { return static_cast<int>(x.size()); }
    bool operator==(const RadixTuple& o) const { return x == o.x; }
};

/// A walk from (0,0) to (n,n) with steps (1,0),(0,1),(-1,0) that never
/// crosses left of the line x = -y and never revisits a vertex, recorded by
/// the x-coordinates of its vertical steps; entry i lies in [-(i-1), i-1].
struct GridPath {
    std::vector<int> vertical_xs;

    int degree() const { return static_cast<int>(vertical_xs.size()); }
    bool operator==(const GridPath& o) const { return vertical_xs == o.vertical_xs; }
};

/// Peel vertices from the right: delete the rightmost vertex, record the
/// 1-based position of the freed singleton among the 2i-1 survivors, delete
/// it, repeat.
RadixTuple kappa(const BrauerDiagram& d);
BrauerDiagram kappa_inverse(const RadixTuple& t);

/// vertical_xs[i] = x_{i+1} - (i+1).
GridPath tuple_to_grid(const RadixTuple& t);
RadixTuple grid_to_tuple(const GridPath& g);

/// Rotate 45 degrees clockwise and stretch: (x,y) -> (x+y, y-x), so
/// (0,1) -> Up, (1,0) -> Down, (-1,0) -> OverhangUp.
OverhangPath grid_to_overhang(const GridPath& g);
GridPath overhang_to_grid(const OverhangPath& p);

/// kappa then the grid rotation: a bijection J_n -> Y_n that does not
/// restrict to the TL/Dyck correspondence the way phi does.
OverhangPath simple_bijection(const BrauerDiagram& d);
BrauerDiagram simple_bijection_inverse(const OverhangPath& p);

}  // namespace brauerpaths
