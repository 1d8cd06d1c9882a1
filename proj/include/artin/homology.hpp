#pragma once

// Homology of a chain complex: Betti numbers and torsion invariant factors.
// Fields go through Gaussian elimination, PIDs (Z, F[t]) through Smith normal
// form. For the Laurent module the computation runs over F[t] and the result
// is normalized by stripping powers of t, which are units in F[t^{+-1}].
//
// Basis extraction produces explicit cycles generating each homology group,
// plus enough transform data to express any cycle in that basis; this is what
// induced maps on homology are computed from.

#include "artin/complex.hpp"
#include "artin/elim.hpp"
#include "artin/snf.hpp"

#include <optional>

namespace artin {

template <class R>
struct HomologyResult {
    int degree = 0;
    long betti = 0;
    std::vector<R> torsion; // non-unit invariant factors, divisibility order
};

template <class F>
HomologyResult<F> homology_field(const ChainComplex<F>& c, int i) {
    static_assert(ring_traits<F>::is_field);
    HomologyResult<F> h;
    h.degree = i;
    if (i < 0 || i > c.top()) return h;
    h.betti = c.dim(i) - field_rank(c.boundary(i)) - field_rank(c.boundary(i + 1));
    return h;
}

template <class R>
HomologyResult<R> homology_pid(const ChainComplex<R>& c, int i) {
    static_assert(!ring_traits<R>::is_field);
    HomologyResult<R> h;
    h.degree = i;
    if (i < 0 || i > c.top()) return h;
    auto s_in = snf(c.boundary(i + 1));
    h.betti = c.dim(i) - snf_rank(c.boundary(i)) - s_in.rank;
    h.torsion = s_in.nontrivial();
    return h;
}

/// Strip unit factors t^k; nullopt when the factor becomes a unit (degree 0).
template <class F>
std::optional<Poly<F>> strip_t_units(Poly<F> p) {
    if (p.is_zero()) return p;
    size_t k = 0;
    while (k < p.c.size() && ring_traits<F>::is_zero(p.c[k])) ++k;
    if (k > 0) p = Poly<F>(std::vector<F>(p.c.begin() + k, p.c.end()));
    if (p.degree() == 0) return std::nullopt;
    return p;
}

template <class F>
HomologyResult<Poly<F>> homology_laurent(const ChainComplex<Poly<F>>& c, int i) {
    HomologyResult<Poly<F>> h = homology_pid(c, i);
    std::vector<Poly<F>> t;
    for (auto& f : h.torsion)
        if (auto g = strip_t_units(f)) t.push_back(std::move(*g));
    h.torsion = std::move(t);
    return h;
}

/// dim_{F_p} H_i == betti_i + t_i(p) + t_{i-1}(p) for Z coefficients
inline bool uct_check(const std::vector<HomologyResult<Int>>& hz,
                      const std::vector<long>& dim_p, unsigned long p) {
    auto tcount = [&](int i) {
        if (i < 0 || i >= static_cast<int>(hz.size())) return 0L;
        long c = 0;
        for (const Int& f : hz[i].torsion)
            if (f % Int(p) == 0) ++c;
        return c;
    };
    for (size_t i = 0; i < dim_p.size(); ++i)
        if (dim_p[i] != hz[i].betti + tcount(static_cast<int>(i)) + tcount(static_cast<int>(i) - 1))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Explicit generators

template <class R>
struct HomologyBasis {
    int degree = 0;
    long betti = 0;
    std::vector<R> torsion;
    // generating cycles as dense chains in C_degree: torsion first, free after
    std::vector<std::vector<R>> torsion_gens, free_gens;

    // machinery to express an arbitrary cycle in this basis
    SparseMatrix<R> kernel_coord; // s x dim: cycle -> kernel coordinates
    SparseMatrix<R> um;           // s x s: SNF row transform of the relations
    std::vector<R> invariants;    // all relation invariants incl. units
    int s = 0, rel_rank = 0;

    /// Coordinates [torsion..., free...] of a cycle's homology class; torsion
    /// coordinates are reduced modulo the matching invariant factor.
    std::vector<R> coords(const std::vector<R>& cycle) const {
        std::vector<R> k(s, R(0));
        for (int a = 0; a < kernel_coord.rows(); ++a)
            for (const auto& [j, v] : kernel_coord.row(a)) k[a] += v * cycle[j];
        std::vector<R> y = um.apply(k);
        std::vector<R> out;
        for (int j = 0; j < rel_rank; ++j) {
            if (ring_traits<R>::is_unit(invariants[j])) continue;
            R r = y[j] - ring_traits<R>::quot(y[j], invariants[j]) * invariants[j];
            out.push_back(std::move(r));
        }
        for (int j = rel_rank; j < s; ++j) out.push_back(y[j]);
        return out;
    }
};

template <class R>
HomologyBasis<R> homology_basis_pid(const ChainComplex<R>& c, int i) {
    static_assert(!ring_traits<R>::is_field);
    HomologyBasis<R> h;
    h.degree = i;
    const int dim = c.dim(i);
    auto out_snf = snf(c.boundary(i), true);
    const int r = out_snf.rank;
    h.s = dim - r;
    // kernel of d_i: columns r.. of V; coordinates via bottom rows of Vinv
    h.kernel_coord = SparseMatrix<R>(h.s, dim);
    for (int a = 0; a < h.s; ++a)
        for (const auto& [j, v] : out_snf.Vinv->row(r + a)) h.kernel_coord.set(a, j, v);
    // image of d_{i+1} written in kernel coordinates
    SparseMatrix<R> m = h.kernel_coord * c.boundary(i + 1);
    auto rel = snf(m, true);
    h.rel_rank = rel.rank;
    h.invariants = rel.factors;
    h.um = *rel.U;
    h.betti = h.s - h.rel_rank;
    // generators: columns of V * (0 | Uinv_M) — i.e. K * Uinv_M columns
    auto gen_chain = [&](int j) {
        std::vector<R> g(dim, R(0));
        for (int a = 0; a < h.s; ++a) {
            R coeff = rel.Uinv->get(a, j);
            if (ring_traits<R>::is_zero(coeff)) continue;
            // kernel basis vector a = column r+a of V
            for (int row = 0; row < dim; ++row) {
                R v = out_snf.V->get(row, r + a);
                if (!ring_traits<R>::is_zero(v)) g[row] += v * coeff;
            }
        }
        return g;
    };
    for (int j = 0; j < h.rel_rank; ++j) {
        if (ring_traits<R>::is_unit(h.invariants[j])) continue;
        h.torsion.push_back(h.invariants[j]);
        h.torsion_gens.push_back(gen_chain(j));
    }
    for (int j = h.rel_rank; j < h.s; ++j) h.free_gens.push_back(gen_chain(j));
    return h;
}

template <class F>
struct FieldHomologyBasis {
    int degree = 0;
    long dim = 0;
    std::vector<std::vector<F>> gens; // cycles whose classes form a basis
    std::vector<int> free_cols;       // kernel coordinate -> chain coordinate
    Rref<F> rel;                      // relations (image) in kernel coordinates
    std::vector<int> quot_coords;     // kernel coordinates surviving to H

    std::vector<F> coords(const std::vector<F>& cycle) const {
        std::vector<F> k(free_cols.size(), F(0));
        for (size_t a = 0; a < free_cols.size(); ++a) k[a] = cycle[free_cols[a]];
        for (size_t t = 0; t < rel.rows.size(); ++t) {
            F f = k[rel.lead[t]];
            if (f == F(0)) continue;
            for (const auto& [j, v] : rel.rows[t]) k[j] += -(f * v);
        }
        std::vector<F> out;
        out.reserve(quot_coords.size());
        for (int j : quot_coords) out.push_back(k[j]);
        return out;
    }
};

template <class F>
FieldHomologyBasis<F> homology_basis_field(const ChainComplex<F>& c, int i) {
    static_assert(ring_traits<F>::is_field);
    FieldHomologyBasis<F> h;
    h.degree = i;
    const int dim = c.dim(i);
    Rref<F> e = rref(c.boundary(i));
    for (int j = 0; j < dim; ++j)
        if (e.pivot_row_of[j] < 0) h.free_cols.push_back(j);
    const int s = static_cast<int>(h.free_cols.size());
    // kernel basis vector a: 1 at free_cols[a], solved entries at pivot columns
    auto kernel_vec = [&](int a) {
        std::vector<F> x(dim, F(0));
        int j = h.free_cols[a];
        x[j] = F(1);
        for (size_t t = 0; t < e.rows.size(); ++t) {
            auto it = e.rows[t].find(j);
            if (it != e.rows[t].end()) x[e.lead[t]] = -it->second;
        }
        return x;
    };
    // image of d_{i+1} in kernel coordinates: rows are relations in F^s
    const SparseMatrix<F> b = c.boundary(i + 1);
    SparseMatrix<F> m(b.cols(), s);
    for (int a = 0; a < s; ++a)
        for (const auto& [col, v] : b.row(h.free_cols[a])) m.set(col, a, v);
    h.rel = rref(m);
    for (int j = 0; j < s; ++j)
        if (h.rel.pivot_row_of[j] < 0) {
            h.quot_coords.push_back(j);
            h.gens.push_back(kernel_vec(j));
        }
    h.dim = static_cast<long>(h.quot_coords.size());
    return h;
}

} // namespace artin
