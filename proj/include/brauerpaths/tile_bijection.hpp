#pragma once

#include <vector>

#include "brauerpaths/diagrams.hpp"
#include "brauerpaths/paths.hpp"

namespace brauerpaths {

/// The move data carrying a Brauer diagram to its TL projection: X[j-1] is
/// the number of single steps to the right taken by the left endpoint of the
/// arc with secondary label j. Replaying the moves in increasing-j order
/// turns `source` into `target`; replaying them inverted in decreasing-j
/// order turns `target` back into `source`.
struct DeltaTrace {
    BrauerDiagram source;
    BrauerDiagram target;  // = tl_projection(source)
    std::vector<int> displacement;
    std::vector<int> move_order;  // labels with positive displacement, increasing

    long long total_steps() const;
};

DeltaTrace delta_trace(const BrauerDiagram& d);

/// Bracket reading of a TL diagram: left ends become Up steps, right ends
/// Down steps. Throws ValidationError on a crossing input.
OverhangPath phi_tl(const BrauerDiagram& d);
/// Matched-bracket diagram of a Dyck path; inverse of phi_tl.
BrauerDiagram phi_tl_inverse(const OverhangPath& t);

/// The tile bijection J_n -> Y_n: the root comes from Pi(D) and each Up step
/// (labelled right to left) carries an overhang stack of length X(label).
OverhangPath phi(const BrauerDiagram& d);

/// Inverse of phi: bracket-match the root Dyck path, then replay the stack
/// displacements right to left, moving each arc's left endpoint leftwards.
BrauerDiagram psi(const OverhangPath& p);

/// Total number of adjacent transpositions recorded in the tiling of p, i.e.
/// the sum of its stack lengths. May exceed crossing_number(psi(p)): the
/// tiling read as a pipe dream need not be reduced.
long long crossing_count(const OverhangPath& p);

}  // namespace brauerpaths
