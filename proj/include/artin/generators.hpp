#pragma once

// Distinguished homology classes of the type-B complexes, written as
// z-monomials (a marked leading block z_c = 1'1^{c-1}0 followed by braid
// monomial blocks x_i) and resolved into explicit chains. Resolution supports
// the symbolic forms
//   boundary(...)/(1+t),  boundary(...)/(1-t^2)^k,  (1-t) * ...,
//   (1-(-t)^e) * ... /(1+t),  boundary(x_i)/p,
// with all divisions exact in the chain module (a non-exact division throws,
// signaling a misapplied formula). Enumerations produce the predicted bases
// of the Laurent-coefficient homology over characteristic 0 and 2, the
// integral generator sets for the two quotient modules (odd n), and the
// two-element basis of the (1-t)-quotient homology (even n).

#include "artin/complex.hpp"
#include "artin/homology.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace artin {

/// slot length of the braid class x_i in the conventions of the given
/// characteristic: p = 0 admits x_0 (one slot) and x_1 (two slots) only;
/// p = 2 gives 2^i slots; odd p gives 2 p^i slots
int x_slots(long p, int i);

/// z_c x_{i_1} ... x_{i_k} (optionally times h^hs, h = a one-slot block,
/// used in odd characteristic): the cell is the concatenation of the block
/// strings with the final 0 dropped. c = 0 means no marked block (type A).
struct ZMonomial {
    int c = 0;            // marked block z_c; 0 = absent
    int hs = 0;           // number of one-slot h blocks
    std::vector<int> xs;  // x indices, weakly increasing
    long p = 2;           // characteristic convention for the x block lengths

    int slots() const;   // total string length n
    int degree() const;  // number of 1-slots
    Cell cell() const;
    std::string str() const;
};

/// symbolic torsion class of the Laurent-coefficient homology
struct ZClass {
    ZMonomial mon;      // the chain under the boundary
    TPoly order;        // claimed torsion order (equals the divisor)
    int degree = 0;     // homology degree of the resolved class
    std::string label;
};

/// predicted basis of H_*(B(n); F[t^{+-1}]) in characteristic 0:
///   boundary(z_{2i+1} x_0^{j-1})/(1+t)        degree 2i,    order 1+t
///   boundary(z_{2i+1} x_0^{j-1} x_1)/(1+t)    degree 2i+1,  order 1+t
///   boundary(z_n)/(1-t^2)  (n even)           degree n-1,   order 1-t^2
std::vector<ZClass> rational_laurent_classes(int n);

/// predicted basis of H_*(B(n); F_2[t^{+-1}]): classes
///   boundary(z_c x_{i_1} ... x_{i_k})/(1-t^2)^{2^{v-1}}
/// over all c >= 1 and weakly increasing x indices with v <= i_1, where
/// v is the 2-adic valuation of c (v = 0 divides by (1+t) instead); the
/// torsion order equals the divisor, which is (1+t)^{2^v} mod 2
std::vector<ZClass> mod2_laurent_classes(int n);

/// weakly increasing index lists (i_1 <= ... <= i_k), i_j >= minidx, with
/// sum of 2^{i_j} equal to total (p = 2 block weights)
std::vector<std::vector<int>> x_multisets(int total, int minidx);

// ---------------------------------------------------------------------------
// Chain-level resolution

/// sparse chain with polynomial coefficients, indexed by cell
template <class F>
using ZChain = std::map<Cell, Poly<F>>;

/// exact division by a divisor with unit leading coefficient (or any nonzero
/// leading coefficient over a field); throws std::domain_error otherwise or
/// when the remainder is nonzero
template <class F>
Poly<F> poly_div_exact(const Poly<F>& a, const Poly<F>& d) {
    if (d.is_zero()) throw std::domain_error("poly_div_exact: zero divisor");
    F lead = d.c.back(), linv;
    if (lead == F(1)) {
        linv = F(1);
    } else if (-lead == F(1)) {
        linv = -F(1);
    } else if constexpr (ring_traits<F>::is_field) {
        linv = ring_traits<F>::inv(lead);
    } else {
        throw std::domain_error("poly_div_exact: divisor leading coefficient is not a unit");
    }
    Poly<F> q, r = a;
    if (r.degree() >= d.degree()) {
        q.c.assign(r.c.size() - d.c.size() + 1, F(0));
        for (int k = static_cast<int>(q.c.size()) - 1; k >= 0; --k) {
            F top = r.coeff(k + d.degree());
            if (top == F(0)) continue;
            F f = top * linv;
            q.c[k] = f;
            for (size_t j = 0; j < d.c.size(); ++j) r.c[k + j] -= f * d.c[j];
        }
        q.trim();
        r.trim();
    }
    if (!r.is_zero()) throw std::domain_error("poly_div_exact: division is not exact");
    return q;
}

template <class F>
ZChain<F> zmon_chain(const ZMonomial& m) {
    return {{m.cell(), Poly<F>(1)}};
}

/// boundary of a type-B chain, coefficients in F[t]
template <class F>
ZChain<F> chain_boundary_B(const ZChain<F>& v, int n) {
    ZChain<F> out;
    for (const auto& [cl, coeff] : v)
        for (const auto& [tc, tp] : boundary_B(cl, n)) {
            Poly<F> w = coeff * poly_from_t<F>(tp);
            if (w.is_zero()) continue;
            auto [it, fresh] = out.try_emplace(tc, w);
            if (!fresh) {
                it->second += w;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

template <class F>
ZChain<F> chain_scale(ZChain<F> v, const Poly<F>& f) {
    ZChain<F> out;
    for (auto& [cl, coeff] : v) {
        Poly<F> w = coeff * f;
        if (!w.is_zero()) out.emplace(cl, std::move(w));
    }
    return out;
}

template <class F>
ZChain<F> chain_div_exact(ZChain<F> v, const Poly<F>& d) {
    for (auto& [cl, coeff] : v) coeff = poly_div_exact(coeff, d);
    return v;
}

/// dense form inside a Laurent-coefficient complex
template <class F>
std::vector<Poly<F>> dense_laurent(const ZChain<F>& v, int deg, const ChainComplex<Poly<F>>& c) {
    std::vector<Poly<F>> out(c.dim(deg), Poly<F>{});
    for (const auto& [cl, coeff] : v) out[c.index[deg].at(cl)] = coeff;
    return out;
}

/// dense form inside a quotient-module complex: the polynomial coefficients
/// are reduced by the module relation (t = -1, t = +1, or modulo 1 - t^2)
template <class R>
std::vector<R> project_chain(const ZChain<R>& v, int deg, const ChainComplex<R>& c) {
    std::vector<R> out(c.dim(deg), R(0));
    for (const auto& [cl, coeff] : v) {
        int k = c.index[deg].at(cl);
        if (c.block == 2) {
            R a(0), b(0);
            for (size_t e = 0; e < coeff.c.size(); ++e) (e % 2 ? b : a) += coeff.c[e];
            out[2 * k] = a;
            out[2 * k + 1] = b;
        } else {
            long t = (c.module == ModuleKind::Mod1MinusT) ? 1 : -1;
            R val(0);
            for (size_t e = coeff.c.size(); e-- > 0;) val = val * R(t) + coeff.c[e];
            out[k] = val;
        }
    }
    return out;
}

/// multiplication by t in the coefficient module of a quotient complex
template <class R>
std::vector<R> module_times_t(const std::vector<R>& v, const ChainComplex<R>& c) {
    std::vector<R> out(v.size(), R(0));
    if (c.block == 2) {
        for (size_t k = 0; k + 1 < v.size(); k += 2) {
            out[k] = v[k + 1];
            out[k + 1] = v[k];
        }
    } else {
        long t = (c.module == ModuleKind::Mod1MinusT) ? 1 : -1;
        for (size_t k = 0; k < v.size(); ++k) out[k] = R(t) * v[k];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resolved generator expressions

template <class R>
struct GeneratorExpr {
    std::string form;
    int degree = 0;
    std::vector<R> chain;  // dense in C_degree of the target complex
};

namespace detail {
inline Poly<Rat> rat_poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long x : cs) v.emplace_back(x);
    return Poly<Rat>(std::move(v));
}
template <class R>
Poly<R> one_plus_t() {
    return Poly<R>(std::vector<R>{R(1), R(1)});
}
template <class R>
Poly<R> one_minus_t() {
    return Poly<R>(std::vector<R>{R(1), R(-1)});
}
}  // namespace detail

/// integral generator sets for the quotient modules, odd n:
///   e = 1 targets R[t]/(1+t), e = 2 targets R[t]/(1-t^2). Elements, for
///   b in {0,1}, j = n-2i-2b >= 1:
///     omega      = boundary(z_{2i+1} x_0^{j-1} x_1^b)/(1+t)     degree 2i+b
///     omega~     = (1-(-t)^e) z_{2i+1} x_0^{j-1} x_1^b /(1+t)   degree 2i+b+1
template <class R>
std::vector<GeneratorExpr<R>> bset_generators(const ChainComplex<R>& target, int e) {
    const int n = target.n;
    if (n % 2 == 0) throw std::invalid_argument("bset_generators: n must be odd");
    if ((e == 1 && target.module != ModuleKind::Mod1PlusT) ||
        (e == 2 && target.module != ModuleKind::Mod1MinusT2) || (e != 1 && e != 2))
        throw std::invalid_argument("bset_generators: module does not match e");
    std::vector<GeneratorExpr<R>> out;
    const Poly<R> opt = detail::one_plus_t<R>();
    // (1 - (-t)^e)/(1+t): 1 for e = 1, 1 - t for e = 2
    const Poly<R> tilde_factor = (e == 1) ? Poly<R>(1) : detail::one_minus_t<R>();
    for (int b = 0; b <= 1; ++b)
        for (int i = 0; n - 2 * i - 2 * b >= 1; ++i) {
            int j = n - 2 * i - 2 * b;
            ZMonomial m;
            m.c = 2 * i + 1;
            m.xs.assign(j - 1, 0);
            if (b) m.xs.push_back(1);
            m.p = 0;
            auto ch = zmon_chain<R>(m);
            int d = m.degree();
            GeneratorExpr<R> om;
            om.form = "boundary(" + m.str() + ")/(1+t)";
            om.degree = d - 1;
            om.chain = project_chain(chain_div_exact(chain_boundary_B(ch, n), opt), d - 1, target);
            out.push_back(std::move(om));
            GeneratorExpr<R> omt;
            omt.form = (e == 1 ? "" : "(1-t) ") + m.str();
            omt.degree = d;
            omt.chain = project_chain(chain_scale(ch, tilde_factor), d, target);
            out.push_back(std::move(omt));
        }
    return out;
}

/// generating set of H_*(B(n); F_2[t]/(1-t^2)) for odd n: for every even
/// c >= 0 and every weakly increasing x-index list with (c+1) + sum 2^{i_j} = n:
///   gamma~ = (1-t) z_{c+1} x_{i_1} ... x_{i_k}
///   gamma^ = boundary(z_{c+1} x_{i_1} ... x_{i_k})/(1+t)
template <class R>
std::vector<GeneratorExpr<R>> gamma_generators(const ChainComplex<R>& target) {
    const int n = target.n;
    if (n % 2 == 0 || target.module != ModuleKind::Mod1MinusT2)
        throw std::invalid_argument("gamma_generators: needs odd n and the 1-t^2 module");
    std::vector<GeneratorExpr<R>> out;
    const Poly<R> opt = detail::one_plus_t<R>();
    const Poly<R> omt = detail::one_minus_t<R>();
    for (int c = 0; c + 1 <= n; c += 2)
        for (const auto& xs : x_multisets(n - (c + 1), 0)) {
            ZMonomial m;
            m.c = c + 1;
            m.xs = xs;
            m.p = 2;
            auto ch = zmon_chain<R>(m);
            int d = m.degree();
            GeneratorExpr<R> gt;
            gt.form = "(1-t) " + m.str();
            gt.degree = d;
            gt.chain = project_chain(chain_scale(ch, omt), d, target);
            out.push_back(std::move(gt));
            GeneratorExpr<R> gh;
            gh.form = "boundary(" + m.str() + ")/(1+t)";
            gh.degree = d - 1;
            gh.chain = project_chain(chain_div_exact(chain_boundary_B(ch, n), opt), d - 1, target);
            out.push_back(std::move(gh));
        }
    return out;
}

/// two-element basis of H_*(B(n); F[t]/(1-t)) for even n over characteristic
/// zero: boundary(z_n)/(1-t) in degree n-1 and z_n in degree n
template <class R>
std::vector<GeneratorExpr<R>> even_mod1mt_basis(const ChainComplex<R>& target) {
    const int n = target.n;
    if (n % 2 != 0 || target.module != ModuleKind::Mod1MinusT)
        throw std::invalid_argument("even_mod1mt_basis: needs even n and the 1-t module");
    ZMonomial m;
    m.c = n;
    m.p = 0;
    auto ch = zmon_chain<R>(m);
    GeneratorExpr<R> top{m.str(), n, project_chain(ch, n, target)};
    GeneratorExpr<R> bd{"boundary(" + m.str() + ")/(1-t)", n - 1,
                        project_chain(chain_div_exact(chain_boundary_B(ch, n), detail::one_minus_t<R>()),
                                      n - 1, target)};
    return {std::move(bd), std::move(top)};
}

/// y_i = boundary(x_i)/p in the type-A complex of length 2p^i - 1 (odd p);
/// the division is exact over the integers and the result reduces into R
template <class R>
GeneratorExpr<R> y_generator(int i, long p, const ChainComplex<R>& acx) {
    const int len = x_slots(p, i) - 1;  // cell length of x_i after the dropped 0
    if (acx.family != Family::A || acx.n != len)
        throw std::invalid_argument("y_generator: complex length must match x_i");
    GeneratorExpr<R> g;
    g.form = "boundary(x" + std::to_string(i) + ")/" + std::to_string(p);
    g.degree = len - 1;
    g.chain.assign(acx.dim(len - 1), R(0));
    for (const auto& [cl, coeff] : boundary_A(cell_ones(len), len)) {
        if (coeff % p != 0) throw std::domain_error("y_generator: division is not exact");
        g.chain[acx.index[len - 1].at(cl)] = to_scalar<R>(coeff / p);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Basis verification

struct BasisReport {
    bool cycles = true;       // every generator is a cycle
    bool independent = true;  // classes are linearly independent (fields)
    bool cardinality = true;  // counts match the homology dimensions
    bool annihilated = true;  // stated torsion kills each class (torsion mode)
    bool generate = true;     // classes generate the homology (torsion mode)
    long count = 0, dim = 0;
    std::vector<std::string> failures;

    bool ok() const { return cycles && independent && cardinality && annihilated && generate; }
};

/// field-coefficient verification: cycles, independence of the classes in
/// every degree, and (when claimed a basis) count == dim H in every degree
template <class F>
BasisReport verify_basis(const ChainComplex<F>& c, const std::vector<GeneratorExpr<F>>& gens,
                         bool claim_basis) {
    static_assert(ring_traits<F>::is_field);
    BasisReport rep;
    rep.count = static_cast<long>(gens.size());
    for (int d = 0; d <= c.top(); ++d) {
        std::vector<const GeneratorExpr<F>*> here;
        for (const auto& g : gens)
            if (g.degree == d) here.push_back(&g);
        auto basis = homology_basis_field(c, d);
        rep.dim += basis.dim;
        SparseMatrix<F> coords(static_cast<int>(basis.dim), static_cast<int>(here.size()));
        for (size_t k = 0; k < here.size(); ++k) {
            const auto& g = *here[k];
            auto img = c.boundary(d).apply(g.chain);
            bool cyc = true;
            for (const auto& v : img) cyc = cyc && ring_traits<F>::is_zero(v);
            if (!cyc) {
                rep.cycles = false;
                rep.failures.push_back(g.form + ": not a cycle");
                continue;
            }
            auto co = basis.coords(g.chain);
            for (size_t r = 0; r < co.size(); ++r)
                coords.set(static_cast<int>(r), static_cast<int>(k), co[r]);
        }
        if (field_rank(coords) != static_cast<int>(here.size())) {
            rep.independent = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": classes are dependent");
        }
        if (claim_basis && static_cast<long>(here.size()) != basis.dim) {
            rep.cardinality = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": " +
                                   std::to_string(here.size()) + " classes vs dim " +
                                   std::to_string(basis.dim));
        }
    }
    return rep;
}

namespace detail {
template <class F>
Poly<F> monic(Poly<F> p) {
    if (p.is_zero()) return p;
    F linv = ring_traits<F>::inv(p.c.back());
    for (auto& x : p.c) x *= linv;
    return p;
}
}  // namespace detail

/// resolved torsion class over F[t]
template <class F>
struct TorsionClass {
    std::string form;
    int degree = 0;
    std::vector<Poly<F>> chain;
    Poly<F> order;
};

template <class F>
std::vector<TorsionClass<F>> resolve_classes(const std::vector<ZClass>& zs,
                                             const ChainComplex<Poly<F>>& laur) {
    std::vector<TorsionClass<F>> out;
    for (const auto& z : zs) {
        Poly<F> d = poly_from_t<F>(z.order);
        auto bd = chain_boundary_B(zmon_chain<F>(z.mon), laur.n);
        TorsionClass<F> t;
        t.form = z.label;
        t.degree = z.degree;
        t.chain = dense_laurent(chain_div_exact(std::move(bd), d), z.degree, laur);
        t.order = std::move(d);
        out.push_back(std::move(t));
    }
    return out;
}

/// torsion-module verification over F[t], localized at t: in every degree the
/// classes must be cycles, be annihilated by their stated orders, generate
/// the homology (all invariant factors of the augmented relation matrix
/// become units once powers of t are stripped), and match the invariant
/// factors in number and in multiset of orders
template <class F>
BasisReport verify_torsion_basis(const ChainComplex<Poly<F>>& c,
                                 const std::vector<TorsionClass<F>>& gens) {
    using P = Poly<F>;
    BasisReport rep;
    rep.count = static_cast<long>(gens.size());
    for (int d = 0; d <= c.top(); ++d) {
        std::vector<const TorsionClass<F>*> here;
        for (const auto& g : gens)
            if (g.degree == d) here.push_back(&g);
        auto basis = homology_basis_pid(c, d);
        // localized invariant factors: strip unit powers of t
        std::vector<P> inv;            // surviving factors, monic
        std::vector<int> coord_of;     // index into the coords vector
        for (size_t j = 0; j < basis.torsion.size(); ++j)
            if (auto s = strip_t_units(basis.torsion[j])) {
                inv.push_back(detail::monic(*s));
                coord_of.push_back(static_cast<int>(j));
            }
        rep.dim += static_cast<long>(inv.size());
        if (basis.betti != 0) {
            rep.generate = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": unexpected free rank");
        }
        if (static_cast<long>(here.size()) != static_cast<long>(inv.size())) {
            rep.cardinality = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": " +
                                   std::to_string(here.size()) + " classes vs " +
                                   std::to_string(inv.size()) + " invariant factors");
        }
        // multiset of claimed orders == multiset of invariant factors
        std::multiset<std::string> want, have;
        for (const auto& f : inv) have.insert(f.str());
        for (const auto* g : here) want.insert(detail::monic(g->order).str());
        if (want != have) {
            rep.cardinality = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": torsion order multiset differs");
        }
        // coordinates of every class; cycle and annihilation checks
        SparseMatrix<P> coords(static_cast<int>(inv.size()), static_cast<int>(here.size()));
        for (size_t k = 0; k < here.size(); ++k) {
            const auto& g = *here[k];
            auto img = c.boundary(d).apply(g.chain);
            bool cyc = true;
            for (const auto& v : img) cyc = cyc && v.is_zero();
            if (!cyc) {
                rep.cycles = false;
                rep.failures.push_back(g.form + ": not a cycle");
                continue;
            }
            auto co = basis.coords(g.chain);
            for (size_t a = 0; a < inv.size(); ++a) coords.set(static_cast<int>(a), static_cast<int>(k), co[coord_of[a]]);
            // order * class = 0 in the localized module
            std::vector<P> scaled(g.chain.size());
            for (size_t j = 0; j < g.chain.size(); ++j) scaled[j] = g.chain[j] * g.order;
            auto sco = basis.coords(scaled);
            for (size_t a = 0; a < inv.size(); ++a)
                if (!ring_traits<P>::divides(inv[a], sco[coord_of[a]])) {
                    rep.annihilated = false;
                    rep.failures.push_back(g.form + ": stated order does not annihilate");
                    break;
                }
        }
        // generation: [coords | diag(invariants)] must have unit invariant
        // factors after localization
        if (!inv.empty() || !here.empty()) {
            SparseMatrix<P> aug(static_cast<int>(inv.size()),
                                static_cast<int>(here.size() + inv.size()));
            for (int r = 0; r < coords.rows(); ++r)
                for (const auto& [col, v] : coords.row(r)) aug.set(r, col, v);
            for (size_t a = 0; a < inv.size(); ++a)
                aug.set(static_cast<int>(a), static_cast<int>(here.size() + a), inv[a]);
            auto s = snf(aug);
            bool onto = s.rank == static_cast<int>(inv.size());
            for (const auto& f : s.factors)
                if (strip_t_units(f)) onto = false;  // a non-unit factor survives
            if (!onto) {
                rep.generate = false;
                rep.failures.push_back("degree " + std::to_string(d) + ": classes do not generate");
            }
        }
    }
    return rep;
}

}  // namespace artin
