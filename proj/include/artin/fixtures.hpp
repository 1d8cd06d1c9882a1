#pragma once

// Machine-readable expected values: the published table of
// H_i(Br_n; H_1(Sigma_n)) for n = 3..13, the printed expansion of the stable
// series, and the stabilization ranges. Every fixture carries a citation
// string naming its source location so verification failures can quote it.

#include "artin/intmath.hpp"

#include <map>
#include <string>
#include <vector>

namespace artin {

struct FixtureGroup {
    long betti = 0;
    std::map<long, int> torsion; // prime -> multiplicity (all table entries are Z_p factors)
    std::string citation;
};

/// key (n, i); entries absent from the table are zero groups
inline const std::map<std::pair<int, int>, FixtureGroup>& fixture_table() {
    static const std::map<std::pair<int, int>, FixtureGroup> table = [] {
        std::map<std::pair<int, int>, FixtureGroup> t;
        auto row = [&](int n, std::vector<FixtureGroup> groups) {
            for (size_t k = 0; k < groups.size(); ++k) {
                groups[k].citation = "reference table, row n=" + std::to_string(n) +
                                     ", column i=" + std::to_string(k + 1);
                t[{n, static_cast<int>(k + 1)}] = groups[k];
            }
        };
        auto tor = [](std::map<long, int> m) { return FixtureGroup{0, std::move(m), ""}; };
        FixtureGroup Z{1, {}, ""};
        row(3, {tor({{2, 1}})});
        row(4, {tor({{2, 2}}), Z, Z});
        row(5, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 1}})});
        row(6, {tor({{2, 1}}), tor({{2, 2}}), tor({{2, 2}, {3, 1}}), Z, Z});
        row(7, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 2}}), tor({{2, 2}}), tor({{2, 1}})});
        row(8, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 3}}), tor({{2, 3}, {3, 1}}),
                tor({{2, 3}, {3, 1}}), Z, Z});
        row(9, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 2}}), tor({{2, 3}}), tor({{2, 3}}),
                tor({{2, 2}}), tor({{2, 1}})});
        row(10, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 2}}), tor({{2, 4}}), tor({{2, 4}}),
                 tor({{2, 4}, {3, 1}}), tor({{2, 3}, {3, 1}, {5, 1}}), Z, Z});
        row(11, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 2}}), tor({{2, 3}}), tor({{2, 4}}),
                 tor({{2, 4}}), tor({{2, 4}}), tor({{2, 3}}), tor({{2, 1}})});
        row(12, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 2}}), tor({{2, 3}}), tor({{2, 5}}),
                 tor({{2, 5}}), tor({{2, 6}, {3, 1}}), tor({{2, 6}, {3, 1}, {5, 1}}),
                 tor({{2, 3}, {3, 1}, {5, 1}}), Z, Z});
        row(13, {tor({{2, 1}}), tor({{2, 1}}), tor({{2, 2}}), tor({{2, 3}}), tor({{2, 4}}),
                 tor({{2, 5}}), tor({{2, 6}}), tor({{2, 6}}), tor({{2, 5}}), tor({{2, 3}}),
                 tor({{2, 1}})});
        return t;
    }();
    return table;
}

inline FixtureGroup fixture_group(int n, int i) {
    auto it = fixture_table().find({n, i});
    if (it != fixture_table().end()) return it->second;
    FixtureGroup zero;
    zero.citation = "reference table, row n=" + std::to_string(n) + " (blank at i=" +
                    std::to_string(i) + ")";
    return zero;
}

/// largest i with a table entry in row n (degrees above are blank = zero)
inline int fixture_row_top(int n) {
    int top = 0;
    for (const auto& [k, g] : fixture_table())
        if (k.first == n) top = std::max(top, k.second);
    return top;
}

/// elementary divisors of a list of invariant factors: prime power -> count
inline std::map<Int, int> elementary_divisors(const std::vector<Int>& invariants) {
    std::map<Int, int> out;
    for (Int f : invariants) {
        f = abs(f);
        for (Int p = 2; p * p <= f; p += 1) {
            if (f % p != 0) continue;
            Int pk = 1;
            while (f % p == 0) {
                pk *= p;
                f /= p;
            }
            out[pk] += 1;
        }
        if (f > 1) out[f] += 1;
    }
    return out;
}

/// printed expansion of the stable series: coefficients of q^1..q^11
inline const std::vector<long>& stable_series_printed() {
    static const std::vector<long> c = {1, 1, 2, 3, 4, 5, 7, 9, 11, 14, 17};
    return c;
}
inline std::string stable_series_citation() {
    return "reference stable-series expansion, terms q^1..q^11";
}

// ---------------------------------------------------------------------------
// Stabilization ranges

/// B-family local-coefficient stabilization st_*: H_i(n) -> H_i(n+1), modules
/// F[t]/(1+t) and F[t]/(1-t^2) over characteristic p (0 = rationals)
inline bool stab_B_epi(long p, long i, long n) {
    if (p == 2) return 2 * i <= n;
    if (p > 2) return p * (i - 1) <= (n - 2) * (p - 1);
    return i + 1 <= n; // p = 0
}
inline bool stab_B_iso(long p, long i, long n) {
    if (p == 2) return 2 * i < n;
    if (p > 2) return p * (i - 1) < (n - 2) * (p - 1);
    return i + 1 < n;
}
inline std::string stab_B_citation() {
    return "reference stabilization ranges for the marked-complex modules";
}

/// symplectic-coefficient stabilization H_i(Br_n; H_1) -> H_i(Br_{n+1}; H_1)
inline bool stab_sym_epi(long i, long n) { return 2 * i <= n - 2; }
inline bool stab_sym_iso(long i, long n) { return 2 * i < n - 2; }

} // namespace artin
