#pragma once

// Chain complexes for the two Artin families, with the abelian coefficient
// modules used throughout: trivial coefficients, the Laurent module where the
// first type-B generator acts by -t, and its quotients by 1+t, 1-t, 1-t^2.
// The 1-t^2 quotient is handled by restriction of scalars: each entry becomes
// a 2x2 block over the base ring, acting on the basis {1, t}.

#include "artin/cells.hpp"
#include "artin/sparse.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace artin {

enum class Family { A, B };

enum class ModuleKind {
    Trivial,    // all generators act by 1
    Laurent,    // free module over F[t^{+-1}], computed over F[t]
    Mod1PlusT,  // t = -1
    Mod1MinusT, // t = +1
    Mod1MinusT2 // modulo 1 - t^2, rank-2 over the base ring
};

std::string family_name(Family f);
std::string module_name(ModuleKind m);
Family parse_family(const std::string& s);
ModuleKind parse_module(const std::string& s);

/// scalar conversions from arbitrary-precision integers
template <class R>
R to_scalar(const Int& v);
template <>
inline Int to_scalar<Int>(const Int& v) {
    return v;
}
template <>
inline Rat to_scalar<Rat>(const Int& v) {
    return Rat(v);
}
template <>
inline Fp to_scalar<Fp>(const Int& v) {
    return Fp(v);
}
template <class F>
Poly<F> poly_from_t(const TPoly& p) {
    std::vector<F> c;
    c.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) c.push_back(to_scalar<F>(v));
    return Poly<F>(std::move(c));
}

template <class R>
struct ChainComplex {
    Family family = Family::A;
    int n = 0;
    ModuleKind module = ModuleKind::Trivial;
    int block = 1; // module rank over the base ring (2 for Mod1MinusT2)

    std::vector<std::vector<Cell>> cells; // cells[d], d = 0..n
    std::vector<int> dims;                // dims[d] = block * #cells[d]
    std::vector<SparseMatrix<R>> bnd;     // bnd[d] : C_d -> C_{d-1}, d = 1..n
    std::vector<std::unordered_map<Cell, int>> index; // cell -> position in cells[d]

    int top() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int d) const { return (d >= 0 && d <= top()) ? dims[d] : 0; }

    /// boundary map C_d -> C_{d-1} with correct shape for any d
    SparseMatrix<R> boundary(int d) const {
        if (d >= 1 && d <= top()) return bnd[d - 1];
        return SparseMatrix<R>(dim(d - 1), dim(d));
    }
};

/// largest d with bnd[d] != 0 followed by dd == 0 everywhere; true iff every
/// composite boundary(d) * boundary(d+1) vanishes
template <class R>
bool check_dd(const ChainComplex<R>& c) {
    for (int d = 2; d <= c.top(); ++d)
        if (!(c.boundary(d - 1) * c.boundary(d)).is_zero()) return false;
    return true;
}

/// type-A complex with trivial coefficients
template <class R>
ChainComplex<R> build_A(int n);

/// type-B complex with the module specialized at a scalar value of t
/// (Mod1PlusT: t = -1; Mod1MinusT: t = +1; Trivial acts the same as t = -1
/// because the generator action -t becomes 1)
template <class R>
ChainComplex<R> build_B_scalar(int n, ModuleKind mk);

/// type-B complex over F[t] (Laurent homology; units t^k are normalized away
/// downstream). F may also be Int for integral dd-checks.
template <class F>
ChainComplex<Poly<F>> build_B_laurent(int n);

/// type-B complex with coefficients in R[t]/(1-t^2), as 2x2 blocks per cell
template <class R>
ChainComplex<R> build_B_mod1mt2(int n);

/// dispatch on ModuleKind for scalar-entry complexes (Laurent excluded)
template <class R>
ChainComplex<R> build_complex(Family f, int n, ModuleKind mk) {
    if (f == Family::A) {
        if (mk != ModuleKind::Trivial)
            throw std::invalid_argument("type A supports only trivial coefficients");
        return build_A<R>(n);
    }
    switch (mk) {
        case ModuleKind::Trivial:
        case ModuleKind::Mod1PlusT:
        case ModuleKind::Mod1MinusT:
            return build_B_scalar<R>(n, mk);
        case ModuleKind::Mod1MinusT2:
            return build_B_mod1mt2<R>(n);
        default:
            throw std::invalid_argument("Laurent module needs build_B_laurent");
    }
}

namespace detail {

template <class R>
void init_cells(ChainComplex<R>& c, int n, int block) {
    c.n = n;
    c.block = block;
    c.cells.resize(n + 1);
    c.dims.resize(n + 1);
    c.index.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        c.cells[d] = cells_of_degree(n, d);
        c.dims[d] = block * static_cast<int>(c.cells[d].size());
        for (size_t k = 0; k < c.cells[d].size(); ++k)
            c.index[d].emplace(c.cells[d][k], static_cast<int>(k));
    }
}

/// reduce a t-polynomial modulo 1 - t^2 to a + b t
inline std::pair<Int, Int> reduce_mod_1mt2(const TPoly& p) {
    Int a = 0, b = 0;
    const auto& cs = p.coeffs();
    for (size_t k = 0; k < cs.size(); ++k) (k % 2 ? b : a) += cs[k];
    return {a, b};
}

} // namespace detail

template <class R>
ChainComplex<R> build_A(int n) {
    ChainComplex<R> c;
    c.family = Family::A;
    c.module = ModuleKind::Trivial;
    detail::init_cells(c, n, 1);
    c.bnd.reserve(n);
    for (int d = 1; d <= n; ++d) {
        SparseMatrix<R> m(c.dims[d - 1], c.dims[d]);
        for (size_t k = 0; k < c.cells[d].size(); ++k)
            for (const auto& [cl, coeff] : boundary_A(c.cells[d][k], n))
                m.add(c.index[d - 1].at(cl), static_cast<int>(k), to_scalar<R>(coeff));
        c.bnd.push_back(std::move(m));
    }
    return c;
}

template <class R>
ChainComplex<R> build_B_scalar(int n, ModuleKind mk) {
    ChainComplex<R> c;
    c.family = Family::B;
    c.module = mk;
    Int t = (mk == ModuleKind::Mod1MinusT) ? 1 : -1;
    detail::init_cells(c, n, 1);
    c.bnd.reserve(n);
    for (int d = 1; d <= n; ++d) {
        SparseMatrix<R> m(c.dims[d - 1], c.dims[d]);
        for (size_t k = 0; k < c.cells[d].size(); ++k)
            for (const auto& [cl, coeff] : boundary_B(c.cells[d][k], n))
                m.add(c.index[d - 1].at(cl), static_cast<int>(k), to_scalar<R>(coeff.eval(t)));
        c.bnd.push_back(std::move(m));
    }
    return c;
}

template <class F>
ChainComplex<Poly<F>> build_B_laurent(int n) {
    ChainComplex<Poly<F>> c;
    c.family = Family::B;
    c.module = ModuleKind::Laurent;
    detail::init_cells(c, n, 1);
    c.bnd.reserve(n);
    for (int d = 1; d <= n; ++d) {
        SparseMatrix<Poly<F>> m(c.dims[d - 1], c.dims[d]);
        for (size_t k = 0; k < c.cells[d].size(); ++k)
            for (const auto& [cl, coeff] : boundary_B(c.cells[d][k], n))
                m.add(c.index[d - 1].at(cl), static_cast<int>(k), poly_from_t<F>(coeff));
        c.bnd.push_back(std::move(m));
    }
    return c;
}

template <class R>
ChainComplex<R> build_B_mod1mt2(int n) {
    ChainComplex<R> c;
    c.family = Family::B;
    c.module = ModuleKind::Mod1MinusT2;
    detail::init_cells(c, n, 2);
    c.bnd.reserve(n);
    for (int d = 1; d <= n; ++d) {
        SparseMatrix<R> m(c.dims[d - 1], c.dims[d]);
        for (size_t k = 0; k < c.cells[d].size(); ++k)
            for (const auto& [cl, coeff] : boundary_B(c.cells[d][k], n)) {
                auto [a, b] = detail::reduce_mod_1mt2(coeff);
                int r = 2 * c.index[d - 1].at(cl), col = 2 * static_cast<int>(k);
                // multiplication by a + b t on basis {1, t}
                m.add(r, col, to_scalar<R>(a));
                m.add(r + 1, col, to_scalar<R>(b));
                m.add(r, col + 1, to_scalar<R>(b));
                m.add(r + 1, col + 1, to_scalar<R>(a));
            }
        c.bnd.push_back(std::move(m));
    }
    return c;
}

} // namespace artin
