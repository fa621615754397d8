#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brauerpaths {

struct CheckResult {
    std::string name;
    bool pass = true;
    long long objects = 0;  // objects examined
    double seconds = 0.0;
    std::string detail;     // first counterexample or failure summary

    std::string line() const;  // "PASS name (objects, seconds)" or FAIL + detail
};

/// |Y_n| and |J_n| both equal (2n-1)!! on the range.
CheckResult verify_counts(int n_min, int n_max, int jobs = 1);

/// psi(phi(D)) = D and phi(psi(p)) = p; exhaustive through
/// `exhaustive_limit`, seeded sampling of `samples` objects per side above.
CheckResult verify_roundtrip(int n_min, int n_max, int jobs = 1,
                             std::uint64_t seed = 12345, int samples = 10000,
                             int exhaustive_limit = 5);

/// psi maps Dyck paths onto TL diagrams through bracket matching, and TL
/// diagrams are fixed by Pi with Dyck images under phi.
CheckResult verify_tl_restriction(int n_min, int n_max, int jobs = 1);

/// psi(a*b) = psi(a)psi(b) over all path pairs with total degree <= bound,
/// and phi_tl distributes over TL concatenation.
CheckResult verify_homomorphism(int max_total_degree, int jobs = 1);

/// The agreement-boundary lemma suite plus delta-trace positivity,
/// exhaustive on the range.
CheckResult verify_structural(int n_min, int n_max, int jobs = 1);

/// kappa -> tuple -> grid -> overhang is a bijection, with a degree-2
/// witness that it differs from phi.
CheckResult verify_simple(int n_min, int n_max, int jobs = 1);

/// Hecke battery: exact relations for two-one-row shapes with a+b <= max_n
/// and for ((2),(1)); e=1 nonnegative closure; e=2 decoupling of 2211; wall
/// valuation reports at l = 2, 3.
CheckResult verify_hecke(int max_n, int jobs = 1);

/// Uniformly random degree-n objects (for sampling above the exhaustive range).
std::string random_path_word(int n, std::uint64_t seed);
std::string random_diagram_pairs(int n, std::uint64_t seed);

}  // namespace brauerpaths
