#pragma once

// Exact Gaussian elimination over a field (Q or F_p), sparse row storage,
// pivoting by Markowitz fill. Produces reduced row echelon form, from which
// rank, kernel bases and linear solves all follow.

#include "artin/sparse.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace artin {

template <class F>
struct Rref {
    int cols = 0;
    int rank = 0;
    std::vector<std::map<int, F>> rows; // nonzero RREF rows, lead coefficient 1
    std::vector<int> lead;              // lead[i] = pivot column of rows[i]
    std::vector<int> pivot_row_of;      // per column: index into rows, or -1
};

template <class F>
Rref<F> rref(const SparseMatrix<F>& a) {
    static_assert(ring_traits<F>::is_field);
    const int m = a.rows(), n = a.cols();
    std::vector<std::map<int, F>> rows(m);
    std::vector<std::set<int>> colrows(n);
    for (int i = 0; i < m; ++i) {
        rows[i] = a.row(i);
        for (const auto& [j, v] : rows[i]) colrows[j].insert(i);
    }
    std::vector<bool> done(m, false);
    std::vector<int> lead_of(m, -1);

    auto row_axpy = [&](int dst, const F& f, int src) {
        for (const auto& [j, v] : rows[src]) {
            auto it = rows[dst].find(j);
            if (it == rows[dst].end()) {
                F nv = f * v;
                if (!(nv == F(0))) {
                    rows[dst].emplace(j, nv);
                    colrows[j].insert(dst);
                }
            } else {
                it->second += f * v;
                if (it->second == F(0)) {
                    rows[dst].erase(it);
                    colrows[j].erase(dst);
                }
            }
        }
    };

    while (true) {
        // pivot among not-yet-done rows: min (row nnz - 1) * (col nnz - 1)
        int pr = -1, pc = -1;
        long best = 0;
        for (int i = 0; i < m; ++i) {
            if (done[i] || rows[i].empty()) continue;
            for (const auto& [j, v] : rows[i]) {
                long cost = static_cast<long>(rows[i].size() - 1) *
                            static_cast<long>(colrows[j].size() - 1);
                if (pr < 0 || cost < best) {
                    pr = i;
                    pc = j;
                    best = cost;
                }
            }
        }
        if (pr < 0) break;
        F inv = ring_traits<F>::inv(rows[pr].at(pc));
        if (!(inv == F(1)))
            for (auto& [j, v] : rows[pr]) v = v * inv;
        // eliminate pc from every other row, done rows included (RREF)
        std::vector<int> targets(colrows[pc].begin(), colrows[pc].end());
        for (int r : targets) {
            if (r == pr) continue;
            F f = -rows[r].at(pc);
            row_axpy(r, f, pr);
        }
        done[pr] = true;
        lead_of[pr] = pc;
    }

    Rref<F> out;
    out.cols = n;
    out.pivot_row_of.assign(n, -1);
    for (int i = 0; i < m; ++i) {
        if (!done[i]) continue;
        out.pivot_row_of[lead_of[i]] = static_cast<int>(out.rows.size());
        out.rows.push_back(std::move(rows[i]));
        out.lead.push_back(lead_of[i]);
    }
    out.rank = static_cast<int>(out.lead.size());
    return out;
}

template <class F>
int field_rank(const SparseMatrix<F>& a) {
    return rref(a).rank;
}

/// Kernel basis of A as dense column vectors (one per free column).
template <class F>
std::vector<std::vector<F>> kernel_basis(const SparseMatrix<F>& a) {
    Rref<F> e = rref(a);
    std::vector<std::vector<F>> basis;
    for (int j = 0; j < e.cols; ++j) {
        if (e.pivot_row_of[j] >= 0) continue;
        std::vector<F> x(e.cols, F(0));
        x[j] = F(1);
        for (size_t i = 0; i < e.rows.size(); ++i) {
            auto it = e.rows[i].find(j);
            if (it != e.rows[i].end()) x[e.lead[i]] = -it->second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Solve A x = b exactly; nullopt when inconsistent. Free variables are 0.
template <class F>
std::optional<std::vector<F>> solve(const SparseMatrix<F>& a, const std::vector<F>& b) {
    SparseMatrix<F> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (const auto& [j, v] : a.row(i)) aug.set(i, j, v);
        if (!(b[i] == F(0))) aug.set(i, a.cols(), b[i]);
    }
    Rref<F> e = rref(aug);
    if (e.pivot_row_of[a.cols()] >= 0) return std::nullopt; // pivot in RHS column
    std::vector<F> x(a.cols(), F(0));
    for (size_t i = 0; i < e.rows.size(); ++i) {
        auto it = e.rows[i].find(a.cols());
        if (it != e.rows[i].end()) x[e.lead[i]] = it->second;
    }
    return x;
}

} // namespace artin
