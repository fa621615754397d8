#include "brauerpaths/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "brauerpaths/hecke_walks.hpp"
#include "brauerpaths/simple_bijection.hpp"
#include "brauerpaths/tile_bijection.hpp"

namespace brauerpaths {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Runs check(k) for k in [0, count) across `jobs` threads; returns the first
// failure message (by index) or empty string.
template <typename Fn>
std::string parallel_check(long long count, int jobs, Fn check) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 64) {
        for (long long k = 0; k < count; ++k) {
            std::string err = check(k);
            if (!err.empty()) return err;
        }
        return {};
    }
    std::vector<std::future<std::pair<long long, std::string>>> futures;
    long long chunk = (count + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        long long lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, &check] {
            for (long long k = lo; k < hi; ++k) {
                std::string err = check(k);
                if (!err.empty()) return std::make_pair(k, err);
            }
            return std::make_pair(static_cast<long long>(-1), std::string());
        }));
    }
    long long first = -1;
    std::string message;
    for (auto& f : futures) {
        auto [at, err] = f.get();
        if (at >= 0 && (first < 0 || at < first)) {
            first = at;
            message = err;
        }
    }
    return message;
}

LVector random_lvector(int n, std::mt19937_64& rng) {
    LVector l;
    for (int k = 1; k <= n; ++k)
        l.values.push_back(std::uniform_int_distribution<int>(0, 2 * (k - 1))(rng));
    return l;
}

BrauerDiagram random_diagram(int n, std::mt19937_64& rng) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    std::vector<int> free_pos(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) free_pos[static_cast<std::size_t>(i)] = i;
    while (!free_pos.empty()) {
        int a = free_pos.front();
        free_pos.erase(free_pos.begin());
        std::size_t pick =
            std::uniform_int_distribution<std::size_t>(0, free_pos.size() - 1)(rng);
        int b = free_pos[pick];
        free_pos.erase(free_pos.begin() + static_cast<std::ptrdiff_t>(pick));
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    return BrauerDiagram(std::move(partner));
}

}  // namespace

std::string CheckResult::line() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << " " << name << " (" << objects << " objects, ";
    out.precision(2);
    out << std::fixed << seconds << "s)";
    if (!pass && !detail.empty()) out << "  -- " << detail;
    return out.str();
}

std::string random_path_word(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return format_path(lvector_to_path(random_lvector(n, rng)));
}

std::string random_diagram_pairs(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return format_diagram(random_diagram(n, rng));
}

CheckResult verify_counts(int n_min, int n_max, int) {
    Stopwatch timer;
    CheckResult result;
    result.name = "counts";
    for (int n = n_min; n <= n_max && result.pass; ++n) {
        long long expect = double_factorial_odd(n);
        long long paths = static_cast<long long>(enumerate_paths(n).size());
        long long diagrams = static_cast<long long>(enumerate_diagrams(n).size());
        result.objects += paths + diagrams;
        if (paths != expect || diagrams != expect) {
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": |Y|=" + std::to_string(paths) +
                            " |J|=" + std::to_string(diagrams) + " expected " +
                            std::to_string(expect);
        }
    }
    result.seconds = timer.seconds();
    return result;
}

CheckResult verify_roundtrip(int n_min, int n_max, int jobs, std::uint64_t seed, int samples,
                             int exhaustive_limit) {
    Stopwatch timer;
    CheckResult result;
    result.name = "roundtrip";
    for (int n = n_min; n <= n_max && result.pass; ++n) {
        if (n <= exhaustive_limit) {
            auto diagrams = enumerate_diagrams(n);
            auto paths = enumerate_paths(n);
            result.objects += static_cast<long long>(diagrams.size() + paths.size());
            std::string err = parallel_check(
                static_cast<long long>(diagrams.size()), jobs, [&](long long k) -> std::string {
                    const auto& d = diagrams[static_cast<std::size_t>(k)];
                    if (psi(phi(d)) != d) return "psi(phi(D)) != D for D=" + format_diagram(d);
                    return {};
                });
            if (err.empty())
                err = parallel_check(
                    static_cast<long long>(paths.size()), jobs, [&](long long k) -> std::string {
                        const auto& p = paths[static_cast<std::size_t>(k)];
                        if (phi(psi(p)) != p) return "phi(psi(p)) != p for p=" + format_path(p);
                        return {};
                    });
            if (!err.empty()) {
                result.pass = false;
                result.detail = "n=" + std::to_string(n) + ": " + err;
            }
        } else {
            result.objects += 2LL * samples;
            std::string err =
                parallel_check(samples, jobs, [&](long long k) -> std::string {
                    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k) * 2654435761ULL);
                    auto d = random_diagram(n, rng);
                    if (psi(phi(d)) != d) return "psi(phi(D)) != D for D=" + format_diagram(d);
                    auto p = lvector_to_path(random_lvector(n, rng));
                    if (phi(psi(p)) != p) return "phi(psi(p)) != p for p=" + format_path(p);
                    return {};
                });
            if (!err.empty()) {
                result.pass = false;
                result.detail = "n=" + std::to_string(n) + " (sampled): " + err;
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

CheckResult verify_tl_restriction(int n_min, int n_max, int jobs) {
    Stopwatch timer;
    CheckResult result;
    result.name = "tl-restriction";
    for (int n = n_min; n <= n_max && result.pass; ++n) {
        auto dycks = enumerate_dyck_paths(n);
        auto tls = enumerate_tl_diagrams(n);
        result.objects += static_cast<long long>(dycks.size() + tls.size());
        std::string err = parallel_check(
            static_cast<long long>(dycks.size()), jobs, [&](long long k) -> std::string {
                const auto& t = dycks[static_cast<std::size_t>(k)];
                auto d = psi(t);
                if (!is_tl(d)) return "psi(" + format_path(t) + ") is not TL";
                if (d != phi_tl_inverse(t)) return "psi != bracket matching on " + format_path(t);
                if (phi_tl(d) != t) return "phi_tl(psi(t)) != t for t=" + format_path(t);
                return {};
            });
        if (err.empty())
            err = parallel_check(
                static_cast<long long>(tls.size()), jobs, [&](long long k) -> std::string {
                    const auto& d = tls[static_cast<std::size_t>(k)];
                    if (tl_projection(d) != d) return "Pi(D) != D for TL D=" + format_diagram(d);
                    if (!phi(d).is_dyck()) return "phi(D) not Dyck for TL D=" + format_diagram(d);
                    return {};
                });
        if (!err.empty()) {
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": " + err;
        }
    }
    result.seconds = timer.seconds();
    return result;
}

CheckResult verify_homomorphism(int max_total_degree, int jobs) {
    Stopwatch timer;
    CheckResult result;
    result.name = "homomorphism";
    std::vector<std::pair<OverhangPath, OverhangPath>> pairs;
    for (int total = 0; total <= max_total_degree; ++total)
        for (int a = 0; a <= total; ++a)
            for (const auto& pa : enumerate_paths(a))
                for (const auto& pb : enumerate_paths(total - a)) pairs.emplace_back(pa, pb);
    result.objects = static_cast<long long>(pairs.size());
    std::string err = parallel_check(
        static_cast<long long>(pairs.size()), jobs, [&](long long k) -> std::string {
            const auto& [a, b] = pairs[static_cast<std::size_t>(k)];
            if (psi(concat_paths(a, b)) != concat_diagrams(psi(a), psi(b)))
                return "psi(a*b) != psi(a)psi(b) for a=" + format_path(a) +
                       " b=" + format_path(b);
            return {};
        });
    if (err.empty()) {
        for (int n = 1; n <= std::min(3, max_total_degree); ++n)
            for (const auto& da : enumerate_tl_diagrams(n))
                for (const auto& db : enumerate_tl_diagrams(1))
                    if (phi_tl(concat_diagrams(da, db)) !=
                        concat_paths(phi_tl(da), phi_tl(db)))
                        err = "phi_tl(DD') != phi_tl(D)*phi_tl(D')";
    }
    if (!err.empty()) {
        result.pass = false;
        result.detail = err;
    }
    result.seconds = timer.seconds();
    return result;
}

CheckResult verify_structural(int n_min, int n_max, int jobs) {
    Stopwatch timer;
    CheckResult result;
    result.name = "structural";
    for (int n = n_min; n <= n_max && result.pass; ++n) {
        auto diagrams = enumerate_diagrams(n);
        result.objects += static_cast<long long>(diagrams.size());
        std::string err = parallel_check(
            static_cast<long long>(diagrams.size()), jobs, [&](long long k) -> std::string {
                const auto& d = diagrams[static_cast<std::size_t>(k)];
                std::string where = " for D=" + format_diagram(d);
                auto pi = tl_projection(d);

                // delta positivity, replay convergence
                auto trace = delta_trace(d);
                for (int j : trace.move_order)
                    if (trace.displacement[static_cast<std::size_t>(j - 1)] <= 0)
                        return "non-positive X" + where;

                if (d == pi) return {};
                int m = right_agreement(d, pi);
                int first = d.size() - m;
                auto sec = secondary_labels(d);
                auto right = right_standard_arcs(d);
                std::set<int> suffix_labels;
                int r = 0;
                for (int i = 0; i < n; ++i) {
                    const Arc& a = right[static_cast<std::size_t>(i)];
                    if (a.left >= first) {
                        ++r;
                        suffix_labels.insert(sec[static_cast<std::size_t>(i)]);
                        if (pi.partner(a.left) != a.right)
                            return "suffix arc differs in Pi(D)" + where;
                    }
                }
                if (static_cast<int>(suffix_labels.size()) != r ||
                    (r > 0 && (*suffix_labels.begin() != 1 || *suffix_labels.rbegin() != r)))
                    return "agreeing labels are not {1..r}" + where;
                int y = first - 1;
                if (y < 1) return "agreement boundary at the left edge" + where;
                if (d.partner(y) <= y) return "boundary vertex not a left end in D" + where;
                if (pi.partner(y) <= y) return "boundary vertex not a left end in Pi(D)" + where;
                if (pi.partner(y - 1) <= y - 1)
                    return "left neighbour not a left end in Pi(D)" + where;
                return {};
            });
        if (!err.empty()) {
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": " + err;
        }
    }
    result.seconds = timer.seconds();
    return result;
}

CheckResult verify_simple(int n_min, int n_max, int jobs) {
    Stopwatch timer;
    CheckResult result;
    result.name = "simple-bijection";
    for (int n = n_min; n <= n_max && result.pass; ++n) {
        auto diagrams = enumerate_diagrams(n);
        result.objects += static_cast<long long>(diagrams.size());
        std::vector<std::string> images(diagrams.size());
        std::string err = parallel_check(
            static_cast<long long>(diagrams.size()), jobs, [&](long long k) -> std::string {
                const auto& d = diagrams[static_cast<std::size_t>(k)];
                auto p = simple_bijection(d);
                if (simple_bijection_inverse(p) != d)
                    return "inverse fails for D=" + format_diagram(d);
                images[static_cast<std::size_t>(k)] = format_path(p);
                return {};
            });
        if (err.empty()) {
            std::set<std::string> unique(images.begin(), images.end());
            if (unique.size() != diagrams.size()) err = "images collide";
        }
        if (!err.empty()) {
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": " + err;
        }
    }
    if (result.pass) {
        bool witness = false;
        for (const auto& d : enumerate_diagrams(2))
            if (simple_bijection(d) != phi(d)) witness = true;
        if (!witness) {
            result.pass = false;
            result.detail = "no degree-2 witness distinguishing the bijections";
        }
    }
    result.seconds = timer.seconds();
    return result;
}

CheckResult verify_hecke(int max_n, int jobs) {
    Stopwatch timer;
    CheckResult result;
    result.name = "hecke";
    std::vector<std::pair<MultiShape, std::vector<int>>> cases;
    for (int a = 1; a < max_n; ++a)
        for (int b = 1; a + b <= max_n; ++b)
            cases.push_back({MultiShape{{{a}, {b}}}, {a + b, 0}});
    cases.push_back({MultiShape{{{2}, {1}}}, {3, 0}});
    cases.push_back({MultiShape{{{1}, {1}, {1}}}, {2, 1, 0}});

    std::string err = parallel_check(
        static_cast<long long>(cases.size()), jobs, [&](long long k) -> std::string {
            const auto& [shape, charges] = cases[static_cast<std::size_t>(k)];
            auto report = verify_relations(build_walk_module(shape, charges));
            if (!report.all_pass())
                return shape.to_string() + ": " + report.failures().front();
            return {};
        });
    result.objects += static_cast<long long>(cases.size());

    if (err.empty()) {
        // e = 1: nonnegative walks carry the action with zero leak
        for (int a = 1; a <= max_n && err.empty(); ++a) {
            for (int b = 1; a + b <= std::max(max_n, 6) && err.empty(); ++b) {
                if (b > a) continue;  // no nonnegative walks end below the axis
                MultiShape shape{{{a}, {b}}};
                try {
                    auto sub = build_walk_module(shape, {1, 0}, [](const StandardTableau& t) {
                        return walk_of(t).min_height() >= 0;
                    });
                    ++result.objects;
                    if (!verify_relations(sub).all_pass())
                        err = shape.to_string() + ": relations fail on nonneg subspace";
                } catch (const ValidationError& e) {
                    err = shape.to_string() + ": e=1 nonneg subspace leaks: " + e.what();
                }
            }
        }
    }
    if (err.empty()) {
        // e = 2 on ((2),(2)): only 2211 decouples, as a quotient
        auto action = build_walk_module(MultiShape{{{2}, {2}}}, {2, 0});
        if (!decoupling_report(action, subset_excluding_walk(action, "2211")).invariant())
            err = "walk 2211 receives a nonzero coefficient at e=2";
        ++result.objects;
    }
    if (err.empty()) {
        // wall diagnostics must run and report the boundary valuations
        auto m22 = build_walk_module(MultiShape{{{2}, {2}}}, {1, 0}, [](const StandardTableau& t) {
            return walk_of(t).min_height() >= 0;
        });
        auto wall2 = decoupling_report(m22, subset_max_height(m22, 1), 4);
        auto m33 = build_walk_module(MultiShape{{{3}, {3}}}, {1, 0}, [](const StandardTableau& t) {
            return walk_of(t).min_height() >= 0;
        });
        auto wall3 = decoupling_report(m33, subset_max_height(m33, 2), 6);
        result.objects += 2;
        for (const auto& leak : wall2.leaks)
            if (!leak.valuation_at_root) err = "missing valuation in l=2 wall report";
        for (const auto& leak : wall3.leaks)
            if (!leak.valuation_at_root) err = "missing valuation in l=3 wall report";
        if (wall2.leaks.empty() || wall3.leaks.empty())
            err = "wall reports list no boundary pairs";
    }

    if (!err.empty()) {
        result.pass = false;
        result.detail = err;
    }
    result.seconds = timer.seconds();
    return result;
}

}  // namespace brauerpaths
