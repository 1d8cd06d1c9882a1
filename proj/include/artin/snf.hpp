#pragma once

// Smith normal form over a Euclidean domain (Z, or F[t] for a field F),
// computed on sparse storage with pivoting by minimal norm and minimal
// Markowitz fill. Transforms U, V with U*A*V = D are optional: they dominate
// memory on large inputs and are needed only for basis extraction.

#include "artin/sparse.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace artin {

template <class R>
struct SNFResult {
    /// diagonal entries in divisibility order, canonical associates, units included
    std::vector<R> factors;
    int rank = 0;
    std::optional<SparseMatrix<R>> U, V;       // U*A*V = diag(factors)
    std::optional<SparseMatrix<R>> Uinv, Vinv; // A = Uinv*diag*Vinv

    std::vector<R> nontrivial() const {
        std::vector<R> out;
        for (const R& f : factors)
            if (!ring_traits<R>::is_unit(f)) out.push_back(f);
        return out;
    }
    SparseMatrix<R> diagonal(int rows, int cols) const {
        SparseMatrix<R> d(rows, cols);
        for (size_t i = 0; i < factors.size(); ++i) d.set(static_cast<int>(i), static_cast<int>(i), factors[i]);
        return d;
    }
};

namespace detail {

template <class R>
class SnfWorker {
  public:
    SnfWorker(const SparseMatrix<R>& a, bool transforms)
        : m_(a.rows()), n_(a.cols()), rows_(m_), colrows_(n_), row_active_(m_, true),
          col_active_(n_, true), transforms_(transforms) {
        for (int i = 0; i < m_; ++i) {
            rows_[i] = a.row(i);
            for (const auto& [j, v] : rows_[i]) colrows_[j].insert(i);
        }
        if (transforms_) {
            u_.assign(m_, {});
            vt_.assign(n_, {});
            uinvt_.assign(m_, {});
            vinv_.assign(n_, {});
            for (int i = 0; i < m_; ++i) u_[i][i] = uinvt_[i][i] = R(1);
            for (int j = 0; j < n_; ++j) vt_[j][j] = vinv_[j][j] = R(1);
        }
    }

    SNFResult<R> run() {
        while (true) {
            auto piv = find_pivot();
            if (!piv) break;
            reduce_pivot(piv->first, piv->second);
            row_active_[piv->first] = false;
            col_active_[piv->second] = false;
            pivots_.push_back(*piv);
        }
        canonicalize_all();
        fix_chain();
        SNFResult<R> res;
        res.rank = static_cast<int>(pivots_.size());
        for (auto& [r, c] : pivots_) res.factors.push_back(rows_[r].at(c));
        if (transforms_) emit_transforms(res);
        return res;
    }

  private:
    using Entry = std::pair<int, int>;

    std::optional<Entry> find_pivot() const {
        std::optional<Entry> best;
        long best_cost = 0;
        const R* best_val = nullptr;
        for (int i = 0; i < m_; ++i) {
            if (!row_active_[i]) continue;
            for (const auto& [j, v] : rows_[i]) {
                if (!col_active_[j]) continue;
                long cost = static_cast<long>(rows_[i].size() - 1) *
                            static_cast<long>(colrows_[j].size() - 1);
                if (!best || ring_traits<R>::norm_less(v, *best_val) ||
                    (!ring_traits<R>::norm_less(*best_val, v) && cost < best_cost)) {
                    best = Entry{i, j};
                    best_cost = cost;
                    best_val = &v;
                }
            }
        }
        return best;
    }

    // row_r -= q * row_p
    void row_sub(int r, int p, const R& q) {
        for (const auto& [j, v] : rows_[p]) add_entry(r, j, -(q * v));
        if (transforms_) {
            for (const auto& [j, v] : u_[p]) map_add(u_[r], j, -(q * v));
            // Uinv picks up the inverse op: column p += q * column r
            for (const auto& [j, v] : uinvt_[r]) map_add(uinvt_[p], j, q * v);
        }
    }
    // col_c -= q * col_p
    void col_sub(int c, int p, const R& q) {
        std::vector<int> touched(colrows_[p].begin(), colrows_[p].end());
        for (int r : touched) add_entry(r, c, -(q * rows_[r].at(p)));
        if (transforms_) {
            for (const auto& [j, v] : vt_[p]) map_add(vt_[c], j, -(q * v));
            // Vinv picks up the inverse op: row p += q * row c
            for (const auto& [j, v] : vinv_[c]) map_add(vinv_[p], j, q * v);
        }
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (const auto& [j, v] : rows_[a]) colrows_[j].erase(a);
        for (const auto& [j, v] : rows_[b]) colrows_[j].erase(b);
        std::swap(rows_[a], rows_[b]);
        for (const auto& [j, v] : rows_[a]) colrows_[j].insert(a);
        for (const auto& [j, v] : rows_[b]) colrows_[j].insert(b);
        if (transforms_) {
            std::swap(u_[a], u_[b]);
            std::swap(uinvt_[a], uinvt_[b]);
        }
    }
    void row_scale(int r, const R& unit, const R& unit_inv) {
        for (auto& [j, v] : rows_[r]) v = v * unit;
        if (transforms_) {
            for (auto& [j, v] : u_[r]) v = v * unit;
            for (auto& [j, v] : uinvt_[r]) v = v * unit_inv;
        }
    }

    void add_entry(int r, int c, const R& delta) {
        if (ring_traits<R>::is_zero(delta)) return;
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) {
            rows_[r].emplace(c, delta);
            colrows_[c].insert(r);
        } else {
            it->second += delta;
            if (ring_traits<R>::is_zero(it->second)) {
                rows_[r].erase(it);
                colrows_[c].erase(r);
            }
        }
    }
    static void map_add(std::map<int, R>& row, int c, const R& delta) {
        if (ring_traits<R>::is_zero(delta)) return;
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, delta);
        } else {
            it->second += delta;
            if (ring_traits<R>::is_zero(it->second)) row.erase(it);
        }
    }

    /// Make (pr, pc) a proper pivot: after this, the pivot row and column
    /// contain no other active entries and the pivot divides what it cleared.
    void reduce_pivot(int pr, int pc) {
        while (true) {
            // clear the pivot column with row operations
            while (true) {
                int r = -1;
                for (int cand : colrows_[pc]) {
                    if (cand != pr && row_active_[cand]) {
                        r = cand;
                        break;
                    }
                }
                if (r < 0) break;
                const R piv = rows_[pr].at(pc);
                const R a = rows_[r].at(pc);
                R q = ring_traits<R>::quot(a, piv);
                if (!ring_traits<R>::is_zero(q)) row_sub(r, pr, q);
                // nonzero remainder has smaller norm than the pivot: promote it
                if (rows_[r].count(pc)) swap_rows(pr, r);
            }
            // clear the pivot row with column operations
            while (true) {
                int c = -1;
                for (const auto& [cand, v] : rows_[pr]) {
                    if (cand != pc && col_active_[cand]) {
                        c = cand;
                        break;
                    }
                }
                if (c < 0) break;
                const R piv = rows_[pr].at(pc);
                const R a = rows_[pr].at(c);
                R q = ring_traits<R>::quot(a, piv);
                if (!ring_traits<R>::is_zero(q)) col_sub(c, pc, q);
                if (rows_[pr].count(c)) swap_cols(pc, c);
            }
            // a column swap can repopulate the pivot column; loop until stable
            bool col_dirty = false;
            for (int cand : colrows_[pc])
                if (cand != pr && row_active_[cand]) col_dirty = true;
            if (!col_dirty) break;
        }
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        std::vector<int> ra(colrows_[a].begin(), colrows_[a].end());
        std::vector<int> rb(colrows_[b].begin(), colrows_[b].end());
        for (int r : ra)
            if (!colrows_[b].count(r)) {
                rows_[r][b] = rows_[r][a];
                rows_[r].erase(a);
            }
        for (int r : rb)
            if (!colrows_[a].count(r)) {
                rows_[r][a] = rows_[r][b];
                rows_[r].erase(b);
            }
        for (int r : ra)
            if (colrows_[b].count(r)) std::swap(rows_[r][a], rows_[r][b]);
        std::set<int> na, nb;
        for (int r : ra) nb.insert(r);
        for (int r : rb) na.insert(r);
        colrows_[a] = std::move(na);
        colrows_[b] = std::move(nb);
        if (transforms_) {
            std::swap(vt_[a], vt_[b]);
            std::swap(vinv_[a], vinv_[b]);
        }
    }

    void canonicalize_all() {
        for (auto& [r, c] : pivots_) {
            const R& v = rows_[r].at(c);
            R cu = ring_traits<R>::canonical_unit(v);
            if (!ring_traits<R>::is_unit(cu))
                throw std::logic_error("snf: canonical_unit is not a unit");
            if (cu == R(1)) continue;
            R cu_inv = unit_inverse(cu);
            row_scale(r, cu_inv, cu);
        }
    }

    static R unit_inverse(const R& u) {
        if constexpr (std::is_same_v<R, Int>) {
            return u; // +-1
        } else {
            // Poly over a field: unit is a nonzero constant
            R q = ring_traits<R>::exact_div(R(1), u);
            return q;
        }
    }

    void fix_chain() {
        const size_t np = pivots_.size();
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = 0; i < np; ++i) {
                for (size_t j = i + 1; j < np; ++j) {
                    const R& di = rows_[pivots_[i].first].at(pivots_[i].second);
                    const R& dj = rows_[pivots_[j].first].at(pivots_[j].second);
                    if (ring_traits<R>::divides(di, dj)) continue;
                    combine(i, j);
                    again = true;
                }
            }
        }
        canonicalize_all();
    }

    /// Replace diag pair (d_i, d_j) by (gcd, lcm) via elementary operations.
    void combine(size_t i, size_t j) {
        auto [ri, ci] = pivots_[i];
        auto [rj, cj] = pivots_[j];
        row_active_[ri] = row_active_[rj] = true;
        col_active_[ci] = col_active_[cj] = true;
        // row_i += row_j turns the 2x2 diagonal block into [[d_i, d_j],[0, d_j]]
        row_sub(ri, rj, R(-1));
        reduce_pivot(ri, ci);
        // whatever is left lives on (rj, cj) up to position: the reduction
        // keeps other rows/cols untouched, but the leftover entry may sit at
        // (rj, cj) still; re-reduce to be safe
        if (rows_[rj].size() > 0) reduce_pivot(rj, cj);
        row_active_[ri] = row_active_[rj] = false;
        col_active_[ci] = col_active_[cj] = false;
        // pivot positions may have moved through swaps inside reduce_pivot;
        // relocate: row ri must hold exactly one entry, same for rj
        relocate(i, ri);
        relocate(j, rj);
    }
    void relocate(size_t idx, int r) {
        if (rows_[r].size() != 1)
            throw std::logic_error("snf: pivot row not singleton after combine");
        pivots_[idx] = {r, rows_[r].begin()->first};
    }

    void emit_transforms(SNFResult<R>& res) {
        // permute so that pivot k lands on position (k, k)
        SparseMatrix<R> u(m_, m_), v(n_, n_);
        std::vector<int> row_of(m_, -1), col_of(n_, -1);
        int k = 0;
        for (auto& [r, c] : pivots_) {
            row_of[r] = k;
            col_of[c] = k;
            ++k;
        }
        for (int r = 0; r < m_; ++r)
            if (row_of[r] < 0) row_of[r] = k++;
        int kc = static_cast<int>(pivots_.size());
        for (int c = 0; c < n_; ++c)
            if (col_of[c] < 0) col_of[c] = kc++;
        for (int r = 0; r < m_; ++r)
            for (const auto& [j, val] : u_[r]) u.set(row_of[r], j, val);
        for (int c = 0; c < n_; ++c)
            for (const auto& [j, val] : vt_[c]) v.set(j, col_of[c], val);
        res.U = std::move(u);
        res.V = std::move(v);
        SparseMatrix<R> uinv(m_, m_), vinv(n_, n_);
        for (int r = 0; r < m_; ++r)
            for (const auto& [i, val] : uinvt_[r]) uinv.set(i, row_of[r], val);
        for (int c = 0; c < n_; ++c)
            for (const auto& [j, val] : vinv_[c]) vinv.set(col_of[c], j, val);
        res.Uinv = std::move(uinv);
        res.Vinv = std::move(vinv);
    }

    int m_, n_;
    std::vector<std::map<int, R>> rows_;
    std::vector<std::set<int>> colrows_;
    std::vector<bool> row_active_, col_active_;
    bool transforms_;
    std::vector<Entry> pivots_;
    std::vector<std::map<int, R>> u_;     // row-major U
    std::vector<std::map<int, R>> vt_;    // row c = column c of V
    std::vector<std::map<int, R>> uinvt_; // row r = column r of U^{-1}
    std::vector<std::map<int, R>> vinv_;  // row-major V^{-1}
};

} // namespace detail

template <class R>
SNFResult<R> snf(const SparseMatrix<R>& a, bool transforms = false) {
    static_assert(!ring_traits<R>::is_field, "snf is for PIDs; use field elimination for fields");
    detail::SnfWorker<R> w(a, transforms);
    return w.run();
}

/// Rank over a PID = rank over its fraction field; cheapest path here is the
/// same elimination without transforms.
template <class R>
int snf_rank(const SparseMatrix<R>& a) {
    return snf(a, false).rank;
}

} // namespace artin
