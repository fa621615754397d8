#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "brauerpaths/diagrams.hpp"

using namespace brauerpaths;

namespace {

// preorder with children in chain order (= counterclockwise first meeting)
void preorder(const PlanarRootedTree& t, int node, std::vector<int>& out) {
    if (node != 0) out.push_back(node);
    for (int c : t.children[static_cast<std::size_t>(node)]) preorder(t, c, out);
}

bool bracket_word_well_nested(const BrauerDiagram& d) {
    int depth = 0;
    for (int pos = 0; pos < d.size(); ++pos) {
        if (d.partner(pos) > pos) {
            ++depth;
        } else {
            --depth;
            if (depth < 0) return false;
            // the matching open bracket must be the partner
            int open = d.partner(pos);
            int inner = 0;
            for (int k = open + 1; k < pos; ++k) inner += (d.partner(k) > k) ? 1 : -1;
            if (inner != 0) return false;
        }
    }
    return depth == 0;
}

}  // namespace

TEST_CASE("parsing, formatting, crossings") {
    auto nested = parse_diagram("1-4,2-3");
    CHECK(nested.degree() == 2);
    CHECK(format_diagram(nested) == "1-4,2-3");
    CHECK(is_tl(nested));
    auto crossing = parse_diagram("1-3,2-4");
    CHECK_FALSE(is_tl(crossing));
    CHECK(crossing_number(crossing) == 1);
    CHECK(is_tl(parse_diagram("1-2,3-4")));
    CHECK_THROWS_AS(parse_diagram("1-2,2-3"), ValidationError);  // 2 used twice
    CHECK_THROWS_AS(parse_diagram("1-2,4-5"), ValidationError);  // 3 uncovered
    CHECK_THROWS_AS(parse_diagram("1-"), ParseError);
    CHECK_THROWS_AS(parse_diagram("2-1"), ParseError);

    for (const auto& d : enumerate_diagrams(4))
        CHECK(is_tl(d) == bracket_word_well_nested(d));
}

TEST_CASE("standard labellings") {
    auto d = parse_diagram("1-3,2-4");
    auto right = right_standard_arcs(d);
    REQUIRE(right.size() == 2);
    CHECK(right[0] == Arc{1, 3});  // positions 2-4, label 1
    CHECK(right[1] == Arc{0, 2});  // positions 1-3, label 2
    auto left = left_standard_arcs(d);
    CHECK(left[0] == Arc{1, 3});
    CHECK(left[1] == Arc{0, 2});
}

TEST_CASE("right chains and arc subdiagrams") {
    CHECK(right_chain(parse_diagram("1-4,2-3")) == std::vector<int>{1});
    CHECK(right_chain(parse_diagram("1-2,3-4")) == std::vector<int>{1, 2});
    CHECK(right_chain(parse_diagram("1-2")) == std::vector<int>{1});
    CHECK(right_chain(parse_diagram("1-3,2-4")) == std::vector<int>{1});
    CHECK(right_chain(parse_diagram("1-5,2-6,3-4")) == std::vector<int>{1});
    CHECK(right_chain(BrauerDiagram(std::vector<int>{})).empty());

    auto sub = arc_subdiagram(parse_diagram("1-4,2-3"), 1);
    REQUIRE(sub.arcs.size() == 1);
    CHECK(sub.arcs[0] == Arc{1, 2});  // positions 2-3
    CHECK(sub.labels == std::vector<int>{2});
    CHECK(arc_subdiagram(parse_diagram("1-2,3-4"), 1).arcs.empty());
    auto sub2 = arc_subdiagram(parse_diagram("1-3,2-4"), 1);
    REQUIRE(sub2.arcs.size() == 1);
    CHECK(sub2.arcs[0] == Arc{0, 2});
    CHECK(sub2.labels == std::vector<int>{2});
    CHECK_THROWS_AS(arc_subdiagram(parse_diagram("1-2"), 5), ValidationError);

    // chain + chain-arc subdiagrams partition the arcs
    for (const auto& d : enumerate_diagrams(4)) {
        std::set<int> seen;
        for (int a : right_chain(d)) {
            CHECK(seen.insert(a).second);
            for (int b : arc_subdiagram(d, a).labels) CHECK(seen.insert(b).second);
        }
        CHECK(static_cast<int>(seen.size()) == d.degree());
    }
}

TEST_CASE("right chain trees and the geometric dual") {
    auto path_tree = right_chain_tree(parse_diagram("1-4,2-3"));
    CHECK(path_tree.children[0] == std::vector<int>{1});
    CHECK(path_tree.children[1] == std::vector<int>{2});
    CHECK(path_tree.children[2].empty());
    CHECK(geometric_dual(path_tree) == parse_diagram("1-4,2-3"));

    auto star = right_chain_tree(parse_diagram("1-2,3-4"));
    CHECK(star.children[0] == std::vector<int>{1, 2});
    CHECK(geometric_dual(star) == parse_diagram("1-2,3-4"));

    CHECK(right_chain_tree(parse_diagram("1-3,2-4")).children[1] == std::vector<int>{2});

    PlanarRootedTree single;
    single.children = {{1}, {}};
    CHECK(geometric_dual(single) == parse_diagram("1-2"));

    // nested-subdiagram recursion: the chain of D^1 is (2,4) and 3 hangs below 2
    auto t = right_chain_tree(parse_diagram("1-6,2-8,3-4,5-7"));
    CHECK(t.children[0] == std::vector<int>{1});
    CHECK(t.children[1] == std::vector<int>{2, 4});
    CHECK(t.children[2] == std::vector<int>{3});
    CHECK(t.children[3].empty());
    CHECK(t.children[4].empty());

    // preorder in chain order visits right-standard labels 1..n in turn,
    // and the dual is TL with matching labels
    for (int n = 1; n <= 4; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto tree = right_chain_tree(d);
            CHECK(tree.node_count() == n);
            std::vector<int> order;
            preorder(tree, 0, order);
            std::vector<int> expect(static_cast<std::size_t>(n));
            std::iota(expect.begin(), expect.end(), 1);
            CHECK(order == expect);

            auto dual = geometric_dual(tree);
            CHECK(is_tl(dual));
            // the arc dual to the edge above node i carries right label i:
            // recover each node's bracket span with the same right-to-left
            // child order and compare against the labelling of the dual
            std::vector<Arc> span(static_cast<std::size_t>(n) + 1);
            int pos = 0;
            auto walk = [&](auto&& self, int node) -> void {
                if (node != 0) span[static_cast<std::size_t>(node)].left = pos++;
                const auto& kids = tree.children[static_cast<std::size_t>(node)];
                for (auto it = kids.rbegin(); it != kids.rend(); ++it) self(self, *it);
                if (node != 0) span[static_cast<std::size_t>(node)].right = pos++;
            };
            walk(walk, 0);
            auto labelled = right_standard_arcs(dual);
            for (int i = 1; i <= n; ++i)
                CHECK(labelled[static_cast<std::size_t>(i - 1)] == span[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("TL projection") {
    CHECK(tl_projection(parse_diagram("1-3,2-4")) == parse_diagram("1-4,2-3"));
    CHECK(tl_projection(parse_diagram("1-2,3-4")) == parse_diagram("1-2,3-4"));
    CHECK(tl_projection(parse_diagram("1-4,2-3")) == parse_diagram("1-4,2-3"));
    CHECK(tl_projection(parse_diagram("1-5,2-4,3-6")) == parse_diagram("1-6,2-5,3-4"));
    CHECK(tl_projection(parse_diagram("1-6,2-8,3-4,5-7")) == parse_diagram("1-8,2-3,4-7,5-6"));

    for (int n = 1; n <= 5; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto pi = tl_projection(d);
            CHECK(is_tl(pi));
            CHECK(tl_projection(pi) == pi);
            if (is_tl(d)) CHECK(pi == d);
        }
    }
}

TEST_CASE("secondary labels") {
    CHECK(secondary_labels(parse_diagram("1-3,2-4")) == std::vector<int>{2, 1});
    CHECK(secondary_labels(parse_diagram("1-2,3-4")) == std::vector<int>{1, 2});
    for (int n = 1; n <= 4; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto sec = secondary_labels(d);
            std::set<int> values(sec.begin(), sec.end());
            CHECK(static_cast<int>(values.size()) == n);  // a permutation of 1..n
            CHECK(*values.begin() == 1);
            CHECK(*values.rbegin() == n);
            if (is_tl(d)) {
                // secondary = left-standard on TL diagrams
                auto right = right_standard_arcs(d);
                auto left = left_standard_arcs(d);
                for (int i = 0; i < n; ++i) {
                    auto it = std::find(left.begin(), left.end(), right[static_cast<std::size_t>(i)]);
                    CHECK(sec[static_cast<std::size_t>(i)] ==
                          static_cast<int>(it - left.begin()) + 1);
                }
            }
        }
    }
}

TEST_CASE("right agreement") {
    CHECK(right_agreement(parse_diagram("1-3,2-4"), parse_diagram("1-4,2-3")) == 2);
    auto d = parse_diagram("1-4,2-3");
    CHECK(right_agreement(d, d) == 4);
    // suffix {3,4} is a pair in one diagram and two singletons in the other
    CHECK(right_agreement(parse_diagram("1-2,3-4"), parse_diagram("1-4,2-3")) == 1);
    CHECK_THROWS_AS(right_agreement(parse_diagram("1-2"), parse_diagram("1-2,3-4")),
                    ValidationError);

    auto r = suffix_restriction(parse_diagram("1-3,2-4"), 3);
    CHECK(r.size() == 3);
    CHECK(r.is_singleton(1));       // vertex 3 pairs out of the suffix
    CHECK(r.partner(0) == 2);       // 2-4 lives inside the suffix
    CHECK(r.pair_count() == 1);
    CHECK(r.singleton_count() == 1);
}

TEST_CASE("agreement boundary lemmas") {
    // exhaustive n <= 4: labels of suffix arcs form {1..r}; the boundary
    // vertex is a left end in both D and Pi(D); its left neighbour is a left
    // end in Pi(D)
    for (int n = 1; n <= 4; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto pi = tl_projection(d);
            if (d == pi) continue;
            int m = right_agreement(d, pi);
            int first = d.size() - m;  // first position of the agreeing suffix
            auto sec = secondary_labels(d);
            auto right = right_standard_arcs(d);
            std::set<int> suffix_labels;
            int r = 0;
            for (int i = 0; i < n; ++i) {
                const Arc& a = right[static_cast<std::size_t>(i)];
                if (a.left >= first) {
                    ++r;
                    suffix_labels.insert(sec[static_cast<std::size_t>(i)]);
                    // the same vertex pair appears in Pi(D)
                    CHECK(pi.partner(a.left) == a.right);
                }
            }
            std::set<int> expect;
            for (int i = 1; i <= r; ++i) expect.insert(i);
            CHECK(suffix_labels == expect);

            int y = first - 1;
            REQUIRE(y >= 1);  // y = position 1 would force D = Pi(D)
            CHECK(d.partner(y) > y);
            CHECK(pi.partner(y) > y);
            CHECK(pi.partner(y - 1) > y - 1);
        }
    }
}

TEST_CASE("nesting, concatenation, primality") {
    CHECK(nest(parse_diagram("1-2")) == parse_diagram("1-4,2-3"));
    CHECK(concat_diagrams(parse_diagram("1-2"), parse_diagram("1-2")) == parse_diagram("1-2,3-4"));
    CHECK(is_prime_diagram(parse_diagram("1-3,2-4")));
    CHECK(is_prime_diagram(parse_diagram("1-4,2-3")));
    CHECK_FALSE(is_prime_diagram(parse_diagram("1-2,3-4")));
    // prime TL diagrams are nested
    for (const auto& d : enumerate_tl_diagrams(3))
        if (is_prime_diagram(d)) CHECK(d.partner(0) == d.size() - 1);
}

TEST_CASE("enumeration counts") {
    auto one = enumerate_diagrams(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == parse_diagram("1-2"));
    CHECK(enumerate_diagrams(2).size() == 3);
    CHECK(enumerate_diagrams(3).size() == 15);
    CHECK(enumerate_tl_diagrams(3).size() == 5);
    CHECK(enumerate_diagrams(5).size() == 945);
}
