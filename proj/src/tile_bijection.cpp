#include "brauerpaths/tile_bijection.hpp"

#include <algorithm>

namespace brauerpaths {

long long DeltaTrace::total_steps() const {
    long long s = 0;
    for (int x : displacement) s += x;
    return s;
}

namespace {

// Arcs tracked by identity through adjacent transpositions: endpoint
// positions mutate, the secondary label attached to each arc does not.
struct TrackedArc {
    int left;
    int right;
};

BrauerDiagram diagram_of(const std::vector<TrackedArc>& arcs, int size) {
    std::vector<int> partner(static_cast<std::size_t>(size), -1);
    for (const auto& a : arcs) {
        partner[static_cast<std::size_t>(a.left)] = a.right;
        partner[static_cast<std::size_t>(a.right)] = a.left;
    }
    return BrauerDiagram(std::move(partner));
}

// Swap the contents of positions pos and pos+1.
void transpose(std::vector<TrackedArc>& arcs, int pos) {
    for (auto& a : arcs) {
        if (a.left == pos)
            a.left = pos + 1;
        else if (a.left == pos + 1)
            a.left = pos;
        if (a.right == pos)
            a.right = pos + 1;
        else if (a.right == pos + 1)
            a.right = pos;
        if (a.left > a.right) std::swap(a.left, a.right);
    }
}

}  // namespace

DeltaTrace delta_trace(const BrauerDiagram& d) {
    const int n = d.degree();
    BrauerDiagram target = tl_projection(d);
    auto sec = secondary_labels(d);
    auto d_right = right_standard_arcs(d);
    auto target_left = left_standard_arcs(target);

    // arc with secondary label j sits at by_label[j-1]
    std::vector<TrackedArc> by_label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Arc& a = d_right[static_cast<std::size_t>(i)];
        by_label[static_cast<std::size_t>(sec[static_cast<std::size_t>(i)] - 1)] = {a.left,
                                                                                   a.right};
    }

    DeltaTrace trace{d, target, std::vector<int>(static_cast<std::size_t>(n), 0), {}};
    BrauerDiagram current = d;
    int iterations = 0;
    while (current != target) {
        if (++iterations > n) throw ValidationError("delta trace failed to converge");
        int m = right_agreement(current, target);
        int first = current.size() - m;
        int r = 0;
        for (const auto& a : by_label)
            if (a.left >= first) ++r;
        const int j = r + 1;
        TrackedArc& moving = by_label[static_cast<std::size_t>(j - 1)];
        const Arc& goal = target_left[static_cast<std::size_t>(j - 1)];
        int shift = goal.left - moving.left;
        if (shift <= 0)
            throw ValidationError("delta trace: non-positive displacement for label " +
                                  std::to_string(j));
        trace.displacement[static_cast<std::size_t>(j - 1)] = shift;
        trace.move_order.push_back(j);
        for (int s = 0; s < shift; ++s) transpose(by_label, moving.left);
        current = diagram_of(by_label, d.size());
    }
    return trace;
}

OverhangPath phi_tl(const BrauerDiagram& d) {
    if (!is_tl(d)) throw ValidationError("phi_tl requires a crossing-free diagram");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(d.size()));
    for (int pos = 0; pos < d.size(); ++pos)
        steps.push_back(d.partner(pos) > pos ? Step::Up : Step::Down);
    return OverhangPath(std::move(steps));
}

BrauerDiagram phi_tl_inverse(const OverhangPath& t) {
    if (!t.is_dyck()) throw ValidationError("phi_tl_inverse requires a Dyck path");
    std::vector<int> partner(t.steps().size());
    std::vector<int> stack;
    for (int pos = 0; pos < static_cast<int>(t.steps().size()); ++pos) {
        if (t.steps()[static_cast<std::size_t>(pos)] == Step::Up) {
            stack.push_back(pos);
        } else {
            int open = stack.back();
            stack.pop_back();
            partner[static_cast<std::size_t>(open)] = pos;
            partner[static_cast<std::size_t>(pos)] = open;
        }
    }
    return BrauerDiagram(std::move(partner));
}

OverhangPath phi(const BrauerDiagram& d) {
    const int n = d.degree();
    DeltaTrace trace = delta_trace(d);
    LVector root = path_to_lvector(phi_tl(trace.target));
    // The Up step of rectangle k is the (n+1-k)-th from the right, and the
    // step labelled i carries the stack of the arc with secondary label i.
    LVector l = root;
    for (int k = 1; k <= n; ++k)
        l.values[static_cast<std::size_t>(k - 1)] +=
            trace.displacement[static_cast<std::size_t>(n - k)];
    return lvector_to_path(l);
}

BrauerDiagram psi(const OverhangPath& p) {
    const int n = p.degree();
    OverhangPath t = root_dyck(p);
    std::vector<int> x = stack_lengths(p);
    BrauerDiagram c = phi_tl_inverse(t);

    auto left_arcs = left_standard_arcs(c);
    std::vector<TrackedArc> by_label(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const Arc& a = left_arcs[static_cast<std::size_t>(j - 1)];
        by_label[static_cast<std::size_t>(j - 1)] = {a.left, a.right};
    }
    for (int j = n; j >= 1; --j) {
        TrackedArc& moving = by_label[static_cast<std::size_t>(j - 1)];
        for (int s = 0; s < x[static_cast<std::size_t>(j - 1)]; ++s) {
            if (moving.left == 0)
                throw ValidationError("psi: stack moves the arc past the left edge");
            transpose(by_label, moving.left - 1);
        }
    }
    return diagram_of(by_label, 2 * n);
}

long long crossing_count(const OverhangPath& p) {
    long long total = 0;
    for (int x : stack_lengths(p)) total += x;
    return total;
}

}  // namespace brauerpaths
