#pragma once

// Mapping cone of a (possibly degree-shifted) chain map f : src -> dst with
// the fixed convention  Cone_j = src_{j-1-shift} (+) dst_j,
//                       D(x, y) = (-dx, f(x) + dy).
// For a plain chain map this satisfies D^2 = 0 for any shift, and the long
// exact sequence reads
//   0 -> coker(f_*: H_{j-shift}(src) -> H_j(dst)) -> H_j(Cone)
//     -> ker(f_*: H_{j-1-shift}(src) -> H_{j-1}(dst)) -> 0.

#include "artin/chainmap.hpp"

namespace artin {

template <class R>
ChainComplex<R> cone(const ChainMap<R>& f) {
    const auto& src = *f.src;
    const auto& dst = *f.dst;
    const int k = f.shift;
    ChainComplex<R> c;
    c.family = dst.family;
    c.module = dst.module;
    c.n = dst.n;
    c.block = 1;
    int top = std::max(src.top() + 1 + k, dst.top());
    c.cells.resize(top + 1);
    c.index.resize(top + 1);
    c.dims.resize(top + 1);
    auto sdim = [&](int j) { return src.dim(j - 1 - k); };
    for (int j = 0; j <= top; ++j) c.dims[j] = sdim(j) + dst.dim(j);
    for (int j = 1; j <= top; ++j) {
        SparseMatrix<R> d(c.dims[j - 1], c.dims[j]);
        auto put = [&](const SparseMatrix<R>& m, int roff, int coff, bool negate) {
            for (int r = 0; r < m.rows(); ++r)
                for (const auto& [col, v] : m.row(r))
                    d.add(r + roff, col + coff, negate ? R(-v) : v);
        };
        put(src.boundary(j - 1 - k), 0, 0, true);
        put(f.mat(j - 1 - k), sdim(j - 1), 0, false);
        put(dst.boundary(j), sdim(j - 1), sdim(j), false);
        c.bnd.push_back(std::move(d));
    }
    return c;
}

/// inclusion dst -> Cone(f) (a plain chain map)
template <class R>
ChainMap<R> cone_inclusion(const ChainComplex<R>& dst, const ChainComplex<R>& cn,
                           const ChainComplex<R>& src, int shift) {
    ChainMap<R> inc;
    inc.src = &dst;
    inc.dst = &cn;
    inc.shift = 0;
    inc.name = "cone-incl";
    for (int j = 0; j <= dst.top(); ++j) {
        SparseMatrix<R> m(cn.dim(j), dst.dim(j));
        int off = src.dim(j - 1 - shift);
        for (int x = 0; x < dst.dim(j); ++x) m.set(off + x, x, R(1));
        inc.mats.push_back(std::move(m));
    }
    return inc;
}

} // namespace artin
