#include "brauerpaths/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace brauerpaths {

BrauerDiagram::BrauerDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
    const int sz = static_cast<int>(partner_.size());
    if (sz % 2 != 0) throw ValidationError("Brauer diagram needs an even number of vertices");
    for (int i = 0; i < sz; ++i) {
        int p = partner_[static_cast<std::size_t>(i)];
        if (p < 0 || p >= sz)
            throw ValidationError("partner of position " + std::to_string(i + 1) +
                                  " is out of range");
        if (p == i)
            throw ValidationError("position " + std::to_string(i + 1) +
                                  " is unpaired (fixed point)");
        if (partner_[static_cast<std::size_t>(p)] != i)
            throw ValidationError("partner map is not an involution at position " +
                                  std::to_string(i + 1));
    }
}

BrauerDiagram BrauerDiagram::from_pairs(int n, const std::vector<Arc>& pairs) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    for (const Arc& a : pairs) {
        for (int pos : {a.left, a.right}) {
            if (pos < 0 || pos >= 2 * n)
                throw ValidationError("pair endpoint " + std::to_string(pos + 1) +
                                      " out of range 1.." + std::to_string(2 * n));
            if (partner[static_cast<std::size_t>(pos)] != -1)
                throw ValidationError("position " + std::to_string(pos + 1) + " used twice");
        }
        if (a.left == a.right)
            throw ValidationError("pair endpoints coincide at " + std::to_string(a.left + 1));
        partner[static_cast<std::size_t>(a.left)] = a.right;
        partner[static_cast<std::size_t>(a.right)] = a.left;
    }
    for (std::size_t i = 0; i < partner.size(); ++i)
        if (partner[i] == -1)
            throw ValidationError("position " + std::to_string(i + 1) + " not covered");
    return BrauerDiagram(std::move(partner));
}

std::vector<Arc> BrauerDiagram::arcs() const {
    std::vector<Arc> out;
    out.reserve(partner_.size() / 2);
    for (int i = 0; i < size(); ++i)
        if (partner(i) > i) out.push_back({i, partner(i)});
    return out;  // already sorted by left endpoint
}

PartialBrauerDiagram::PartialBrauerDiagram(std::vector<int> partner)
    : partner_(std::move(partner)) {
    const int sz = static_cast<int>(partner_.size());
    for (int i = 0; i < sz; ++i) {
        int p = partner_[static_cast<std::size_t>(i)];
        if (p < 0 || p >= sz) throw ValidationError("partial diagram partner out of range");
        if (partner_[static_cast<std::size_t>(p)] != i)
            throw ValidationError("partial diagram partner map is not an involution");
    }
}

int PartialBrauerDiagram::singleton_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i) c += is_singleton(i);
    return c;
}

BrauerDiagram parse_diagram(std::string_view text) {
    std::vector<Arc> pairs;
    int max_pos = 0;
    std::size_t i = 0;
    auto read_int = [&](const char* what) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + i)
            throw ParseError(std::string("expected ") + what + " in pair list", i);
        i = static_cast<std::size_t>(ptr - text.data());
        return value;
    };
    while (i < text.size()) {
        int a = read_int("left endpoint");
        if (i >= text.size() || text[i] != '-') throw ParseError("expected '-' between endpoints", i);
        ++i;
        int b = read_int("right endpoint");
        if (a < 1 || b < 1) throw ParseError("positions are 1-based", i);
        if (a >= b) throw ParseError("pairs must be written min-first", i);
        pairs.push_back({a - 1, b - 1});
        max_pos = std::max(max_pos, b);
        if (i < text.size()) {
            if (text[i] != ',') throw ParseError("expected ',' between pairs", i);
            ++i;
        }
    }
    if (pairs.empty()) throw ParseError("empty pair list", 0);
    if (max_pos % 2 != 0) throw ValidationError("odd number of covered positions");
    return BrauerDiagram::from_pairs(max_pos / 2, pairs);
}

std::string format_diagram(const BrauerDiagram& d) {
    std::string out;
    for (const Arc& a : d.arcs()) {
        if (!out.empty()) out += ',';
        out += std::to_string(a.left + 1) + "-" + std::to_string(a.right + 1);
    }
    return out;
}

bool is_tl(const BrauerDiagram& d) {
    auto as = d.arcs();
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            // as sorted by left endpoint: crossing iff left_j < right_i < right_j
            if (as[j].left < as[i].right && as[i].right < as[j].right) return false;
        }
    return true;
}

int crossing_number(const BrauerDiagram& d) {
    auto as = d.arcs();
    int c = 0;
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = i + 1; j < as.size(); ++j)
            if (as[j].left < as[i].right && as[i].right < as[j].right) ++c;
    return c;
}

std::vector<Arc> right_standard_arcs(const BrauerDiagram& d) {
    auto as = d.arcs();
    std::sort(as.begin(), as.end(), [](const Arc& a, const Arc& b) { return a.right > b.right; });
    return as;
}

std::vector<Arc> left_standard_arcs(const BrauerDiagram& d) {
    auto as = d.arcs();
    std::sort(as.begin(), as.end(), [](const Arc& a, const Arc& b) { return a.left > b.left; });
    return as;
}

std::vector<Arc> right_chain_arcs(const std::vector<Arc>& arcs) {
    std::vector<Arc> chain;
    if (arcs.empty()) return chain;
    // right end -> arc, descending
    std::map<int, Arc, std::greater<int>> by_right;
    for (const Arc& a : arcs) by_right.emplace(a.right, a);
    Arc cur = by_right.begin()->second;
    chain.push_back(cur);
    while (true) {
        auto it = by_right.lower_bound(cur.left - 1);  // first right end < cur.left
        if (it == by_right.end()) break;
        cur = it->second;
        chain.push_back(cur);
    }
    return chain;
}

namespace {

std::vector<Arc> arcs_inside(const std::vector<Arc>& arcs, const Arc& host) {
    std::vector<Arc> out;
    for (const Arc& a : arcs)
        if (a.right > host.left && a.right < host.right) out.push_back(a);
    return out;
}

}  // namespace

std::vector<int> right_chain(const BrauerDiagram& d) {
    auto labelled = right_standard_arcs(d);
    std::vector<int> out;
    for (const Arc& a : right_chain_arcs(d.arcs())) {
        auto it = std::find(labelled.begin(), labelled.end(), a);
        out.push_back(static_cast<int>(it - labelled.begin()) + 1);
    }
    return out;
}

LabelledArcSet arc_subdiagram(const BrauerDiagram& d, int label) {
    auto labelled = right_standard_arcs(d);
    if (label < 1 || label > static_cast<int>(labelled.size()))
        throw ValidationError("unknown arc label " + std::to_string(label));
    const Arc host = labelled[static_cast<std::size_t>(label - 1)];
    LabelledArcSet out;
    for (std::size_t i = 0; i < labelled.size(); ++i) {
        const Arc& a = labelled[i];
        if (a.right > host.left && a.right < host.right) {
            out.arcs.push_back(a);
            out.labels.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

namespace {

// Chains of nested subdiagrams; each arc lands in exactly one chain.
void build_chain_tree(const std::vector<Arc>& arcs, int parent,
                      const std::map<int, int>& label_of_right,
                      std::vector<std::vector<int>>& children) {
    for (const Arc& a : right_chain_arcs(arcs)) {
        int node = label_of_right.at(a.right);
        children[static_cast<std::size_t>(parent)].push_back(node);
        build_chain_tree(arcs_inside(arcs, a), node, label_of_right, children);
    }
}

}  // namespace

PlanarRootedTree right_chain_tree(const BrauerDiagram& d) {
    const int n = d.degree();
    auto labelled = right_standard_arcs(d);
    std::map<int, int> label_of_right;
    for (int i = 0; i < n; ++i)
        label_of_right[labelled[static_cast<std::size_t>(i)].right] = i + 1;
    PlanarRootedTree t;
    t.children.assign(static_cast<std::size_t>(n) + 1, {});
    build_chain_tree(d.arcs(), 0, label_of_right, t.children);
    return t;
}

namespace {

// Children appear right to left in the bracket word, so an arc's dual
// receives the right-standard label of its tree node.
void emit_brackets(const PlanarRootedTree& t, int node, std::vector<int>& word) {
    const auto& kids = t.children[static_cast<std::size_t>(node)];
    if (node != 0) word.push_back(node);  // open, remember the label
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) emit_brackets(t, *it, word);
    if (node != 0) word.push_back(-node);  // close
}

}  // namespace

BrauerDiagram geometric_dual(const PlanarRootedTree& t) {
    std::vector<int> word;
    emit_brackets(t, 0, word);
    const int n = t.node_count();
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    std::vector<int> stack;
    for (int pos = 0; pos < 2 * n; ++pos) {
        if (word[static_cast<std::size_t>(pos)] > 0) {
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

BrauerDiagram tl_projection(const BrauerDiagram& d) {
    return geometric_dual(right_chain_tree(d));
}

std::vector<int> secondary_labels(const BrauerDiagram& d) {
    BrauerDiagram pi = tl_projection(d);
    auto pi_right = right_standard_arcs(pi);
    auto pi_left = left_standard_arcs(pi);
    std::vector<int> out;
    out.reserve(pi_right.size());
    for (const Arc& a : pi_right) {
        auto it = std::find(pi_left.begin(), pi_left.end(), a);
        out.push_back(static_cast<int>(it - pi_left.begin()) + 1);
    }
    return out;
}

PartialBrauerDiagram suffix_restriction(const BrauerDiagram& d, int m) {
    const int first = d.size() - m;
    std::vector<int> partner(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int p = d.partner(first + i);
        partner[static_cast<std::size_t>(i)] = (p >= first) ? p - first : i;
    }
    return PartialBrauerDiagram(std::move(partner));
}

int right_agreement(const BrauerDiagram& a, const BrauerDiagram& b) {
    if (a.degree() != b.degree())
        throw ValidationError("right_agreement requires equal degrees");
    int m = 0;
    while (m < a.size() && suffix_restriction(a, m + 1) == suffix_restriction(b, m + 1)) ++m;
    return m;
}

BrauerDiagram nest(const BrauerDiagram& d) {
    const int sz = d.size();
    std::vector<int> partner(static_cast<std::size_t>(sz) + 2);
    partner[0] = sz + 1;
    partner[static_cast<std::size_t>(sz) + 1] = 0;
    for (int i = 0; i < sz; ++i) partner[static_cast<std::size_t>(i) + 1] = d.partner(i) + 1;
    return BrauerDiagram(std::move(partner));
}

BrauerDiagram concat_diagrams(const BrauerDiagram& a, const BrauerDiagram& b) {
    const int sa = a.size();
    std::vector<int> partner(static_cast<std::size_t>(sa + b.size()));
    for (int i = 0; i < sa; ++i) partner[static_cast<std::size_t>(i)] = a.partner(i);
    for (int i = 0; i < b.size(); ++i)
        partner[static_cast<std::size_t>(sa + i)] = b.partner(i) + sa;
    return BrauerDiagram(std::move(partner));
}

bool is_prime_diagram(const BrauerDiagram& d) {
    if (d.degree() == 0) return false;
    for (int m = 1; m < d.degree(); ++m) {
        bool split = true;
        for (int i = 0; i < 2 * m && split; ++i)
            if (d.partner(i) >= 2 * m) split = false;
        if (split) return false;
    }
    return true;
}

namespace {

void fill_matchings(std::vector<int>& partner, std::vector<BrauerDiagram>& out) {
    int first = -1;
    for (std::size_t i = 0; i < partner.size(); ++i)
        if (partner[i] == -1) {
            first = static_cast<int>(i);
            break;
        }
    if (first == -1) {
        out.push_back(BrauerDiagram(partner));
        return;
    }
    for (int j = first + 1; j < static_cast<int>(partner.size()); ++j) {
        if (partner[static_cast<std::size_t>(j)] != -1) continue;
        partner[static_cast<std::size_t>(first)] = j;
        partner[static_cast<std::size_t>(j)] = first;
        fill_matchings(partner, out);
        partner[static_cast<std::size_t>(first)] = -1;
        partner[static_cast<std::size_t>(j)] = -1;
    }
}

}  // namespace

std::vector<BrauerDiagram> enumerate_diagrams(int n) {
    std::vector<BrauerDiagram> out;
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    fill_matchings(partner, out);
    return out;
}

std::vector<BrauerDiagram> enumerate_tl_diagrams(int n) {
    std::vector<BrauerDiagram> out;
    for (const auto& d : enumerate_diagrams(n))
        if (is_tl(d)) out.push_back(d);
    return out;
}

}  // namespace brauerpaths
