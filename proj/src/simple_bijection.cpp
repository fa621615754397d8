#include "brauerpaths/simple_bijection.hpp"

#include <algorithm>

namespace brauerpaths {

namespace {

void check_tuple(const RadixTuple& t) {
    for (int i = 1; i <= t.degree(); ++i) {
        int v = t.x[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v >= 2 * i)
            throw ValidationError("tuple entry " + std::to_string(i) + " = " + std::to_string(v) +
                                  " outside [1, " + std::to_string(2 * i - 1) + "]");
    }
}

}  // namespace

RadixTuple kappa(const BrauerDiagram& d) {
    const int n = d.degree();
    // positions[i] = partner index within the shrinking vertex list
    std::vector<int> partner;
    partner.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) partner.push_back(d.partner(i));
    RadixTuple t;
    t.x.assign(static_cast<std::size_t>(n), 0);
    for (int i = n; i >= 1; --i) {
        int singleton = partner.back();  // partner of the deleted rightmost vertex
        partner.pop_back();
        t.x[static_cast<std::size_t>(i - 1)] = singleton + 1;
        partner.erase(partner.begin() + singleton);
        for (auto& p : partner)
            if (p > singleton) --p;
    }
    return t;
}

BrauerDiagram kappa_inverse(const RadixTuple& t) {
    check_tuple(t);
    std::vector<int> partner;
    for (int i = 1; i <= t.degree(); ++i) {
        int pos = t.x[static_cast<std::size_t>(i - 1)] - 1;
        for (auto& p : partner)
            if (p >= pos) ++p;
        partner.insert(partner.begin() + pos, 2 * i - 1);
        partner.push_back(pos);
    }
    return BrauerDiagram(std::move(partner));
}

GridPath tuple_to_grid(const RadixTuple& t) {
    check_tuple(t);
    GridPath g;
    g.vertical_xs.reserve(t.x.size());
    for (int i = 1; i <= t.degree(); ++i)
        g.vertical_xs.push_back(t.x[static_cast<std::size_t>(i - 1)] - i);
    return g;
}

RadixTuple grid_to_tuple(const GridPath& g) {
    RadixTuple t;
    t.x.reserve(g.vertical_xs.size());
    for (int i = 1; i <= g.degree(); ++i)
        t.x.push_back(g.vertical_xs[static_cast<std::size_t>(i - 1)] + i);
    check_tuple(t);
    return t;
}

OverhangPath grid_to_overhang(const GridPath& g) {
    const int n = g.degree();
    std::vector<Step> steps;
    int x = 0;
    for (int i = 1; i <= n; ++i) {
        int vx = g.vertical_xs[static_cast<std::size_t>(i - 1)];
        while (x < vx) {
            steps.push_back(Step::Down);
            ++x;
        }
        while (x > vx) {
            steps.push_back(Step::OverhangUp);
            --x;
        }
        steps.push_back(Step::Up);
    }
    while (x < n) {
        steps.push_back(Step::Down);
        ++x;
    }
    return OverhangPath(std::move(steps));
}

GridPath overhang_to_grid(const OverhangPath& p) {
    // invert the rotation: the grid x of the i-th vertical step is
    // (a - b)/2 at the Up step's start (a,b)
    GridPath g;
    int a = 0, b = 0;
    for (Step s : p.steps()) {
        switch (s) {
            case Step::Up:
                g.vertical_xs.push_back((a - b) / 2);
                ++a;
                ++b;
                break;
            case Step::Down:
                ++a;
                --b;
                break;
            case Step::OverhangUp:
                --a;
                ++b;
                break;
        }
    }
    return g;
}

OverhangPath simple_bijection(const BrauerDiagram& d) {
    return grid_to_overhang(tuple_to_grid(kappa(d)));
}

BrauerDiagram simple_bijection_inverse(const OverhangPath& p) {
    return kappa_inverse(grid_to_tuple(overhang_to_grid(p)));
}

}  // namespace brauerpaths
