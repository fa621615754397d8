#include <doctest.h>

#include <set>

#include "brauerpaths/simple_bijection.hpp"
#include "brauerpaths/tile_bijection.hpp"

using namespace brauerpaths;

TEST_CASE("kappa and its inverse") {
    CHECK(kappa(parse_diagram("1-2")) == RadixTuple{{1}});
    CHECK(kappa(parse_diagram("1-4,2-3")) == RadixTuple{{1, 1}});
    CHECK(kappa(parse_diagram("1-2,3-4")) == RadixTuple{{1, 3}});
    CHECK(kappa(parse_diagram("1-3,2-4")) == RadixTuple{{1, 2}});

    CHECK(kappa_inverse(RadixTuple{{1}}) == parse_diagram("1-2"));
    CHECK(kappa_inverse(RadixTuple{{1, 1}}) == parse_diagram("1-4,2-3"));
    CHECK(kappa_inverse(RadixTuple{{1, 3}}) == parse_diagram("1-2,3-4"));
    CHECK_THROWS_AS(kappa_inverse(RadixTuple{{2}}), ValidationError);
    CHECK_THROWS_AS(kappa_inverse(RadixTuple{{1, 4}}), ValidationError);

    for (int n = 1; n <= 5; ++n)
        for (const auto& d : enumerate_diagrams(n)) CHECK(kappa_inverse(kappa(d)) == d);
}

TEST_CASE("tuples, grid paths, rotation") {
    CHECK(tuple_to_grid(RadixTuple{{1, 1}}) == GridPath{{0, -1}});
    CHECK(tuple_to_grid(RadixTuple{{1, 3}}) == GridPath{{0, 1}});
    CHECK(tuple_to_grid(RadixTuple{{1}}) == GridPath{{0}});

    CHECK(format_path(grid_to_overhang(GridPath{{0, -1}})) == "12'1222");
    CHECK(format_path(grid_to_overhang(GridPath{{0, 0}})) == "1122");
    CHECK(format_path(grid_to_overhang(GridPath{{0, 1}})) == "1212");

    // grid paths without (-1,0) steps rotate onto Dyck paths and back
    for (int n = 1; n <= 4; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto g = tuple_to_grid(kappa(d));
            CHECK(grid_to_tuple(g) == kappa(d));
            auto p = grid_to_overhang(g);
            CHECK(p.degree() == n);
            CHECK(overhang_to_grid(p) == g);
            bool has_left = false;
            for (std::size_t i = 0; i + 1 < g.vertical_xs.size(); ++i)
                if (g.vertical_xs[i + 1] < g.vertical_xs[i]) has_left = true;
            CHECK(has_left == !p.is_dyck());
        }
    }
}

TEST_CASE("grid path geometry stays right of x = -y") {
    // walk out every grid path induced by a tuple and check the constraints
    for (int n = 1; n <= 5; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto g = tuple_to_grid(kappa(d));
            std::set<std::pair<int, int>> seen;
            int x = 0, y = 0;
            seen.insert({0, 0});
            auto visit = [&](int nx, int ny) {
                CHECK(nx >= -ny);
                CHECK(seen.insert({nx, ny}).second);
                x = nx;
                y = ny;
            };
            for (int i = 1; i <= n; ++i) {
                int vx = g.vertical_xs[static_cast<std::size_t>(i - 1)];
                CHECK(vx >= -(i - 1));
                CHECK(vx <= i - 1);
                while (x < vx) visit(x + 1, y);
                while (x > vx) visit(x - 1, y);
                visit(x, y + 1);
            }
            while (x < n) visit(x + 1, y);
            CHECK(x == n);
            CHECK(y == n);
        }
    }
}

TEST_CASE("the simple bijection is a bijection and differs from phi") {
    CHECK(format_path(simple_bijection(parse_diagram("1-4,2-3"))) == "12'1222");
    CHECK(format_path(phi(parse_diagram("1-4,2-3"))) == "1122");
    CHECK(format_path(simple_bijection(parse_diagram("1-2"))) == "12");

    std::set<std::string> images2;
    for (const auto& d : enumerate_diagrams(2)) images2.insert(format_path(simple_bijection(d)));
    CHECK(images2 == std::set<std::string>{"1212", "12'1222", "1122"});

    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> images;
        for (const auto& d : enumerate_diagrams(n)) {
            auto p = simple_bijection(d);
            CHECK(simple_bijection_inverse(p) == d);
            images.insert(format_path(p));
        }
        CHECK(images.size() == enumerate_diagrams(n).size());
    }

    // a degree-2 witness that the two bijections disagree
    bool differ = false;
    for (const auto& d : enumerate_diagrams(2))
        if (simple_bijection(d) != phi(d)) differ = true;
    CHECK(differ);
}
