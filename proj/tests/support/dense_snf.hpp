#pragma once

// Test-only helpers: a dense textbook Smith reduction used as an independent
// cross-check of the sparse implementation, and a dense -> sparse converter.

#include "artin/snf.hpp"

#include <vector>

namespace artin::testsupport {

inline SparseMatrix<Int> from_dense(const std::vector<std::vector<long>>& d) {
    int m = static_cast<int>(d.size());
    int n = m ? static_cast<int>(d[0].size()) : 0;
    SparseMatrix<Int> a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, Int(d[i][j]));
    return a;
}

inline std::vector<std::vector<Int>> to_dense(const SparseMatrix<Int>& a) {
    std::vector<std::vector<Int>> d(a.rows(), std::vector<Int>(a.cols(), Int(0)));
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i)) d[i][j] = v;
    return d;
}

/// Independent dense textbook Smith reduction, used only as a cross-check.
inline std::vector<Int> dense_snf_oracle(std::vector<std::vector<Int>> a) {
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : 0;
    std::vector<Int> out;
    int r0 = 0, c0 = 0;
    while (r0 < m && c0 < n) {
        // find the entry of minimal absolute value in the remaining block
        int pi = -1, pj = -1;
        for (int i = r0; i < m; ++i)
            for (int j = c0; j < n; ++j)
                if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[r0], a[pi]);
        for (int i = r0; i < m; ++i) std::swap(a[i][c0], a[i][pj]);
        bool clean = true;
        for (int i = r0 + 1; i < m; ++i) {
            Int q = a[i][c0] / a[r0][c0];
            for (int j = c0; j < n; ++j) a[i][j] -= q * a[r0][j];
            if (a[i][c0] != 0) clean = false;
        }
        for (int j = c0 + 1; j < n; ++j) {
            Int q = a[r0][j] / a[r0][c0];
            for (int i = r0; i < m; ++i) a[i][j] -= q * a[i][c0];
            if (a[r0][j] != 0) clean = false;
        }
        if (!clean) continue;
        // pivot must also divide the rest of the block
        bool divides_all = true;
        for (int i = r0 + 1; i < m && divides_all; ++i)
            for (int j = c0 + 1; j < n && divides_all; ++j)
                if (a[i][j] % a[r0][c0] != 0) divides_all = false;
        if (!divides_all) {
            for (int i = r0 + 1; i < m; ++i) {
                bool bad = false;
                for (int j = c0 + 1; j < n; ++j)
                    if (a[i][j] % a[r0][c0] != 0) bad = true;
                if (bad) {
                    for (int j = c0; j < n; ++j) a[r0][j] += a[i][j];
                    break;
                }
            }
            continue;
        }
        out.push_back(abs(a[r0][c0]));
        ++r0;
        ++c0;
    }
    return out;
}

}  // namespace artin::testsupport
