#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauerpaths/errors.hpp"

namespace brauerpaths {

/// Lattice step of an overhang path. Tokens: Up "1", Down "2", OverhangUp "2'".
/// Up maps (a,b) to (a+1,b+1), Down to (a+1,b-1), OverhangUp to (a-1,b+1).
enum class Step : std::uint8_t { Up, Down, OverhangUp };

/// A noncollapsing path from (0,0) to (2n,0) inside the strip 0 <= x <= 2n,
/// y >= 0, built from Up/Down/OverhangUp steps. Dyck paths are the ones with
/// no OverhangUp steps. Identity is the step word; the l-vector is a derived
/// canonical form. Immutable after construction.
class OverhangPath {
public:
    /// Validates the word geometrically; degree 0 (empty word) is allowed.
    explicit OverhangPath(std::vector<Step> steps);

    int degree() const { return degree_; }
    const std::vector<Step>& steps() const { return steps_; }
    /// Number of OverhangUp steps (the "m" in the 2n+2m step count).
    int overhang_count() const;
    bool is_dyck() const { return overhang_count() == 0; }

    /// All visited lattice points, starting at (0,0); size = steps + 1.
    std::vector<std::pair<int, int>> vertices() const;

    bool operator==(const OverhangPath& o) const { return steps_ == o.steps_; }
    bool operator!=(const OverhangPath& o) const { return !(*this == o); }
    bool operator<(const OverhangPath& o) const { return steps_ < o.steps_; }

private:
    std::vector<Step> steps_;
    int degree_;
};

/// The per-rectangle diamond counts (l_1,...,l_n) of a path's lower region;
/// 0 <= l_k <= 2(k-1), and bijective with paths of degree n.
struct LVector {
    std::vector<int> values;

    int degree() const { return static_cast<int>(values.size()); }
    bool operator==(const LVector& o) const { return values == o.values; }
};

/// The diamond tiles of a path's lower region addressed as (rectangle k,
/// height j), 1-based, present iff l_k >= j; the n base half-diamond tiles
/// are implicit. The Euclidean bottom vertex of tile (k,j) is
/// (2k-2-(j-1), j-1).
struct TileSet {
    LVector lvector;

    int degree() const { return lvector.degree(); }
    bool contains(int k, int j) const;
    long long diamond_count() const;
    bool subset_of(const TileSet& o) const;
    /// Bottom vertices of all diamonds, rectangle-major.
    std::vector<std::pair<int, int>> diamond_bottoms() const;

    static std::pair<int, int> bottom_vertex(int k, int j) { return {2 * k - 2 - (j - 1), j - 1}; }
};

/// Parses a step word ("1", "2", "2'" tokens, no separators).
/// Throws ParseError for bad tokens, ValidationError for geometric faults.
OverhangPath parse_path(std::string_view word);
std::string format_path(const OverhangPath& p);
std::string to_string(Step s);

/// l_k is the height at which the k-th Up step starts.
LVector path_to_lvector(const OverhangPath& p);
/// Inverse of path_to_lvector; throws ValidationError if l violates its bounds.
OverhangPath lvector_to_path(const LVector& l);
TileSet tiles_of(const OverhangPath& p);

/// The lowest path p0 = 1212...12 of degree n.
OverhangPath lowest_path(int n);

/// All overhang paths of degree n via l-vector iteration; |result| = (2n-1)!!.
std::vector<OverhangPath> enumerate_paths(int n);
/// Independent route: depth-first search over step words with pruning.
std::vector<OverhangPath> enumerate_paths_dfs(int n);
/// All Dyck paths of degree n (Catalan many).
std::vector<OverhangPath> enumerate_dyck_paths(int n);

/// Lower-region containment; throws ValidationError on degree mismatch.
bool path_leq(const OverhangPath& p, const OverhangPath& q);

/// The unique maximal Dyck path below p.
OverhangPath root_dyck(const OverhangPath& p);

/// Side-by-side concatenation; degree 0 is the identity.
OverhangPath concat_paths(const OverhangPath& a, const OverhangPath& b);

/// Maximal factorization into prime paths (paths admitting no nontrivial
/// side-by-side split); factors concatenate back to p.
std::vector<OverhangPath> prime_factorize(const OverhangPath& p);
bool is_prime_path(const OverhangPath& p);

/// X(i) = number of diamonds outside the root attached to the i-th Up step
/// counted from the right, i.e. l(p)_k - l(root)_k at k = n+1-i.
std::vector<int> stack_lengths(const OverhangPath& p);

/// (2n-1)!! = 1*3*5*...*(2n-1).
long long double_factorial_odd(int n);

}  // namespace brauerpaths
