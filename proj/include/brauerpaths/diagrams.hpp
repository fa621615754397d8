#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brauerpaths/errors.hpp"

namespace brauerpaths {

/// An arc of a diagram; positions are 0-based internally, 1-based in text.
struct Arc {
    int left;
    int right;

    bool operator==(const Arc& o) const { return left == o.left && right == o.right; }
    bool operator<(const Arc& o) const {
        return left != o.left ? left < o.left : right < o.right;
    }
};

/// A perfect matching of 2n points on a line (arcs drawn below the line).
/// partner is a fixed-point-free involution on 0..2n-1.
class BrauerDiagram {
public:
    explicit BrauerDiagram(std::vector<int> partner);
    static BrauerDiagram from_pairs(int n, const std::vector<Arc>& pairs);

    int degree() const { return static_cast<int>(partner_.size()) / 2; }
    int size() const { return static_cast<int>(partner_.size()); }
    int partner(int pos) const { return partner_[static_cast<std::size_t>(pos)]; }
    /// Arcs as (min,max) pairs sorted by left endpoint.
    std::vector<Arc> arcs() const;

    bool operator==(const BrauerDiagram& o) const { return partner_ == o.partner_; }
    bool operator!=(const BrauerDiagram& o) const { return !(*this == o); }
    bool operator<(const BrauerDiagram& o) const { return partner_ < o.partner_; }

private:
    std::vector<int> partner_;
};

/// Like BrauerDiagram but parts of size 1 (singletons) are allowed;
/// partner(i) == i marks a singleton. Used for suffix restrictions.
class PartialBrauerDiagram {
public:
    explicit PartialBrauerDiagram(std::vector<int> partner);

    int size() const { return static_cast<int>(partner_.size()); }
    int partner(int pos) const { return partner_[static_cast<std::size_t>(pos)]; }
    bool is_singleton(int pos) const { return partner(pos) == pos; }
    int singleton_count() const;
    int pair_count() const { return (size() - singleton_count()) / 2; }

    bool operator==(const PartialBrauerDiagram& o) const { return partner_ == o.partner_; }

private:
    std::vector<int> partner_;
};

/// Arcs of a (sub)diagram with their inherited right-standard labels;
/// positions refer to the parent diagram. `labels[i]` labels `arcs[i]`.
struct LabelledArcSet {
    std::vector<Arc> arcs;
    std::vector<int> labels;
};

/// Ordered tree on {root 0} + arc labels 1..n; children listed in right
/// chain order (first child = rightmost chain arc).
struct PlanarRootedTree {
    std::vector<std::vector<int>> children;  // children[0] = root's children

    int node_count() const { return static_cast<int>(children.size()) - 1; }
    bool operator==(const PlanarRootedTree& o) const { return children == o.children; }
};

/// Text format "a-b,c-d,..." with 1-based positions; canonical form has each
/// pair min-first and pairs sorted by left endpoint.
BrauerDiagram parse_diagram(std::string_view text);
std::string format_diagram(const BrauerDiagram& d);

/// True iff no two arcs cross (no i<j<k<l with pairs {i,k},{j,l}).
bool is_tl(const BrauerDiagram& d);
/// Number of crossing arc pairs.
int crossing_number(const BrauerDiagram& d);

/// Arcs labelled 1..n by right endpoint, right to left: result[i] has
/// right-standard label i+1.
std::vector<Arc> right_standard_arcs(const BrauerDiagram& d);
/// Arcs labelled 1..n by left endpoint, right to left.
std::vector<Arc> left_standard_arcs(const BrauerDiagram& d);

/// Right chain of an arc set: start at the rightmost right end, then jump to
/// the first right end strictly left of the current arc's left end.
std::vector<Arc> right_chain_arcs(const std::vector<Arc>& arcs);
/// The chain of D as right-standard labels.
std::vector<int> right_chain(const BrauerDiagram& d);

/// Arcs of D whose right endpoint lies strictly inside the arc with
/// right-standard label `label`, keeping inherited labels.
LabelledArcSet arc_subdiagram(const BrauerDiagram& d, int label);

/// Assembles the right chains of nested arc subdiagrams into a tree whose
/// preorder (children in chain order) visits labels 1..n in order.
PlanarRootedTree right_chain_tree(const BrauerDiagram& d);

/// Geometric dual of a planar rooted tree: the TL diagram whose bracket word
/// lists each node's children right to left. The arc dual to the edge above
/// node i gets right-standard label i.
BrauerDiagram geometric_dual(const PlanarRootedTree& t);

/// Pi = dual of the right chain tree; idempotent, identity on TL diagrams.
BrauerDiagram tl_projection(const BrauerDiagram& d);

/// secondary[i-1] is the secondary label of the arc with right-standard
/// label i: the left-standard label of the right-corresponding arc in Pi(D).
std::vector<int> secondary_labels(const BrauerDiagram& d);

/// Length of the longest common suffix of vertices on which the two diagrams
/// restrict (pairs inside kept, pairs leaving become singletons) to the same
/// partial diagram; 2n when equal. Throws on degree mismatch.
int right_agreement(const BrauerDiagram& a, const BrauerDiagram& b);
/// The restriction of d to its last m positions.
PartialBrauerDiagram suffix_restriction(const BrauerDiagram& d, int m);

/// [D]: new outer arc around the whole diagram.
BrauerDiagram nest(const BrauerDiagram& d);
/// Side-by-side concatenation.
BrauerDiagram concat_diagrams(const BrauerDiagram& a, const BrauerDiagram& b);
/// No split point 2m has every arc on one side.
bool is_prime_diagram(const BrauerDiagram& d);

/// All (2n-1)!! perfect matchings of 2n points.
std::vector<BrauerDiagram> enumerate_diagrams(int n);
std::vector<BrauerDiagram> enumerate_tl_diagrams(int n);

}  // namespace brauerpaths
