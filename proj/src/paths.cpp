#include "brauerpaths/paths.hpp"

#include <algorithm>
#include <set>

namespace brauerpaths {

namespace {

std::pair<int, int> apply_step(std::pair<int, int> v, Step s) {
    switch (s) {
        case Step::Up: return {v.first + 1, v.second + 1};
        case Step::Down: return {v.first + 1, v.second - 1};
        case Step::OverhangUp: return {v.first - 1, v.second + 1};
    }
    return v;  // unreachable
}

}  // namespace

OverhangPath::OverhangPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int ups = 0;
    for (Step s : steps_)
        if (s == Step::Up) ++ups;
    degree_ = ups;
    const int limit = 2 * degree_;

    std::set<std::pair<int, int>> seen;
    std::pair<int, int> pos{0, 0};
    seen.insert(pos);
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        pos = apply_step(pos, steps_[i]);
        if (pos.first < 0 || pos.first > limit || pos.second < 0)
            throw ValidationError("path leaves the region at step " + std::to_string(i + 1) +
                                  " (vertex " + std::to_string(pos.first) + "," +
                                  std::to_string(pos.second) + ")");
        if (!seen.insert(pos).second)
            throw ValidationError("path revisits vertex (" + std::to_string(pos.first) + "," +
                                  std::to_string(pos.second) + ") at step " +
                                  std::to_string(i + 1));
    }
    if (pos != std::pair<int, int>{limit, 0})
        throw ValidationError("path ends at (" + std::to_string(pos.first) + "," +
                              std::to_string(pos.second) + "), expected (" +
                              std::to_string(limit) + ",0)");
}

int OverhangPath::overhang_count() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::OverhangUp));
}

std::vector<std::pair<int, int>> OverhangPath::vertices() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(steps_.size() + 1);
    std::pair<int, int> pos{0, 0};
    out.push_back(pos);
    for (Step s : steps_) out.push_back(pos = apply_step(pos, s));
    return out;
}

bool TileSet::contains(int k, int j) const {
    if (k < 1 || k > degree() || j < 1) return false;
    return lvector.values[static_cast<std::size_t>(k - 1)] >= j;
}

long long TileSet::diamond_count() const {
    long long total = 0;
    for (int v : lvector.values) total += v;
    return total;
}

bool TileSet::subset_of(const TileSet& o) const {
    if (degree() != o.degree()) return false;
    for (int k = 0; k < degree(); ++k)
        if (lvector.values[static_cast<std::size_t>(k)] >
            o.lvector.values[static_cast<std::size_t>(k)])
            return false;
    return true;
}

std::vector<std::pair<int, int>> TileSet::diamond_bottoms() const {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= degree(); ++k)
        for (int j = 1; j <= lvector.values[static_cast<std::size_t>(k - 1)]; ++j)
            out.push_back(bottom_vertex(k, j));
    return out;
}

OverhangPath parse_path(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == '1') {
            steps.push_back(Step::Up);
        } else if (c == '2') {
            if (i + 1 < word.size() && word[i + 1] == '\'') {
                steps.push_back(Step::OverhangUp);
                ++i;
            } else {
                steps.push_back(Step::Down);
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in path word", i);
        }
    }
    return OverhangPath(std::move(steps));
}

std::string to_string(Step s) {
    switch (s) {
        case Step::Up: return "1";
        case Step::Down: return "2";
        case Step::OverhangUp: return "2'";
    }
    return "?";
}

std::string format_path(const OverhangPath& p) {
    std::string out;
    for (Step s : p.steps()) out += to_string(s);
    return out;
}

LVector path_to_lvector(const OverhangPath& p) {
    LVector l;
    l.values.reserve(static_cast<std::size_t>(p.degree()));
    std::pair<int, int> pos{0, 0};
    for (Step s : p.steps()) {
        if (s == Step::Up) l.values.push_back(pos.second);
        pos = apply_step(pos, s);
    }
    return l;
}

namespace {

void check_lvector(const LVector& l) {
    for (int k = 1; k <= l.degree(); ++k) {
        int v = l.values[static_cast<std::size_t>(k - 1)];
        if (v < 0 || v > 2 * (k - 1))
            throw ValidationError("l-vector entry " + std::to_string(k) + " = " +
                                  std::to_string(v) + " outside [0, " +
                                  std::to_string(2 * (k - 1)) + "]");
    }
}

std::vector<Step> lvector_to_steps(const LVector& l) {
    std::vector<Step> steps;
    int prev = 0;  // l_0; the k-th Up step starts at height l_k on x+y = 2k-2
    for (int k = 1; k <= l.degree(); ++k) {
        int cur = l.values[static_cast<std::size_t>(k - 1)];
        if (k > 1) {
            for (int i = 0; i < prev + 1 - cur; ++i) steps.push_back(Step::Down);
            for (int i = 0; i < cur - prev - 1; ++i) steps.push_back(Step::OverhangUp);
        }
        steps.push_back(Step::Up);
        prev = cur;
    }
    if (l.degree() > 0)
        for (int i = 0; i < prev + 1; ++i) steps.push_back(Step::Down);
    return steps;
}

}  // namespace

OverhangPath lvector_to_path(const LVector& l) {
    check_lvector(l);
    return OverhangPath(lvector_to_steps(l));
}

TileSet tiles_of(const OverhangPath& p) { return TileSet{path_to_lvector(p)}; }

OverhangPath lowest_path(int n) {
    std::vector<Step> steps;
    for (int i = 0; i < n; ++i) {
        steps.push_back(Step::Up);
        steps.push_back(Step::Down);
    }
    return OverhangPath(std::move(steps));
}

std::vector<OverhangPath> enumerate_paths(int n) {
    std::vector<OverhangPath> out;
    LVector l;
    l.values.assign(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(lvector_to_path(l));
        int k = n - 1;
        while (k >= 0 && l.values[static_cast<std::size_t>(k)] == 2 * k) {
            l.values[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++l.values[static_cast<std::size_t>(k)];
    }
    return out;
}

namespace {

void dfs_paths(std::vector<Step>& word, std::pair<int, int> pos, int ups_used, int n,
               std::set<std::pair<int, int>>& seen, std::vector<OverhangPath>& out) {
    if (pos == std::pair<int, int>{2 * n, 0} && ups_used == n) {
        out.push_back(OverhangPath(word));
        return;
    }
    for (Step s : {Step::Up, Step::Down, Step::OverhangUp}) {
        if (s == Step::Up && ups_used == n) continue;
        auto next = apply_step(pos, s);
        if (next.first < 0 || next.first > 2 * n || next.second < 0) continue;
        if (next.second > 2 * n) continue;
        if (seen.count(next)) continue;
        seen.insert(next);
        word.push_back(s);
        dfs_paths(word, next, ups_used + (s == Step::Up ? 1 : 0), n, seen, out);
        word.pop_back();
        seen.erase(next);
    }
}

}  // namespace

std::vector<OverhangPath> enumerate_paths_dfs(int n) {
    std::vector<OverhangPath> out;
    std::vector<Step> word;
    std::set<std::pair<int, int>> seen{{0, 0}};
    dfs_paths(word, {0, 0}, 0, n, seen, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OverhangPath> enumerate_dyck_paths(int n) {
    std::vector<OverhangPath> out;
    for (const auto& p : enumerate_paths(n))
        if (p.is_dyck()) out.push_back(p);
    return out;
}

bool path_leq(const OverhangPath& p, const OverhangPath& q) {
    if (p.degree() != q.degree())
        throw ValidationError("path_leq requires equal degrees, got " +
                              std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
    LVector lp = path_to_lvector(p), lq = path_to_lvector(q);
    for (int k = 0; k < p.degree(); ++k)
        if (lp.values[static_cast<std::size_t>(k)] > lq.values[static_cast<std::size_t>(k)])
            return false;
    return true;
}

OverhangPath root_dyck(const OverhangPath& p) {
    LVector l = path_to_lvector(p), t;
    t.values.reserve(l.values.size());
    int prev = -1;  // so that l_1 is capped at 0
    for (int v : l.values) {
        int cur = std::min(v, prev + 1);
        t.values.push_back(cur);
        prev = cur;
    }
    return lvector_to_path(t);
}

OverhangPath concat_paths(const OverhangPath& a, const OverhangPath& b) {
    std::vector<Step> steps = a.steps();
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return OverhangPath(std::move(steps));
}

namespace {

// A split after the degree-m prefix is legal iff every later rectangle's
// stack fits in the suffix frame: l_k <= 2(k-m-1) for all k > m.
bool split_legal(const std::vector<int>& l, int m) {
    for (int k = m + 1; k <= static_cast<int>(l.size()); ++k)
        if (l[static_cast<std::size_t>(k - 1)] > 2 * (k - m - 1)) return false;
    return true;
}

}  // namespace

std::vector<OverhangPath> prime_factorize(const OverhangPath& p) {
    const LVector l = path_to_lvector(p);
    const int n = p.degree();
    std::vector<OverhangPath> factors;
    int start = 0;
    for (int m = 1; m <= n; ++m) {
        if (m == n || split_legal(l.values, m)) {
            LVector piece;
            for (int k = start + 1; k <= m; ++k)
                piece.values.push_back(l.values[static_cast<std::size_t>(k - 1)]);
            factors.push_back(lvector_to_path(piece));
            start = m;
        }
    }
    return factors;
}

bool is_prime_path(const OverhangPath& p) {
    return p.degree() > 0 && prime_factorize(p).size() == 1;
}

std::vector<int> stack_lengths(const OverhangPath& p) {
    LVector lp = path_to_lvector(p), lt = path_to_lvector(root_dyck(p));
    const int n = p.degree();
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int k = n + 1 - i;
        x[static_cast<std::size_t>(i - 1)] = lp.values[static_cast<std::size_t>(k - 1)] -
                                             lt.values[static_cast<std::size_t>(k - 1)];
    }
    return x;
}

long long double_factorial_odd(int n) {
    long long r = 1;
    for (int k = 1; k <= n; ++k) r *= 2 * k - 1;
    return r;
}

}  // namespace brauerpaths
