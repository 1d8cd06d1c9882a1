#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/elim.hpp"
#include "artin/snf.hpp"

#include "support/dense_snf.hpp"

#include <random>

using namespace artin;

namespace {

using testsupport::dense_snf_oracle;
using testsupport::from_dense;

} // namespace

TEST_CASE("snf fixed examples") {
    auto a = from_dense({{2, 4}, {6, 8}});
    auto s = snf(a);
    CHECK(s.rank == 2);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == 2);
    CHECK(s.factors[1] == 4);
    CHECK(s.nontrivial() == std::vector<Int>{Int(2), Int(4)});

    auto id = SparseMatrix<Int>::identity(5);
    auto si = snf(id);
    CHECK(si.rank == 5);
    CHECK(si.nontrivial().empty());

    auto z = SparseMatrix<Int>(3, 4);
    auto sz = snf(z);
    CHECK(sz.rank == 0);
    CHECK(sz.factors.empty());
}

TEST_CASE("snf transforms reconstruct the input") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> val(-6, 6), dim(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
        int m = dim(rng), n = dim(rng);
        SparseMatrix<Int> a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (val(rng) > 2) a.set(i, j, Int(val(rng)));
        auto s = snf(a, true);
        REQUIRE(s.U.has_value());
        REQUIRE(s.V.has_value());
        auto d = s.diagonal(m, n);
        CHECK(*s.U * a * *s.V == d);
        CHECK(*s.Uinv * d * *s.Vinv == a);
        CHECK(*s.U * *s.Uinv == SparseMatrix<Int>::identity(m));
        CHECK(*s.V * *s.Vinv == SparseMatrix<Int>::identity(n));
        // divisibility chain, canonical signs
        for (size_t k = 0; k < s.factors.size(); ++k) {
            CHECK(s.factors[k] > 0);
            if (k + 1 < s.factors.size())
                CHECK(s.factors[k + 1] % s.factors[k] == 0);
        }
    }
}

TEST_CASE("snf agrees with a dense oracle") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> val(-9, 9), dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        int m = dim(rng), n = dim(rng);
        SparseMatrix<Int> a(m, n);
        std::vector<std::vector<Int>> dense(m, std::vector<Int>(n, Int(0)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                int v = val(rng);
                if (v % 2 == 0) continue; // keep it sparse-ish
                a.set(i, j, Int(v));
                dense[i][j] = v;
            }
        auto s = snf(a);
        auto expect = dense_snf_oracle(dense);
        REQUIRE(s.factors.size() == expect.size());
        for (size_t k = 0; k < expect.size(); ++k) CHECK(s.factors[k] == expect[k]);
    }
}

TEST_CASE("snf over a polynomial ring") {
    using P = Poly<Rat>;
    P one_plus_t{std::vector<Rat>{Rat(1), Rat(1)}};
    P one_minus_t2{std::vector<Rat>{Rat(1), Rat(0), Rat(-1)}};
    SparseMatrix<P> a(2, 2);
    a.set(0, 0, one_minus_t2); // deliberately out of divisibility order
    a.set(1, 1, one_plus_t);
    auto s = snf(a);
    REQUIRE(s.factors.size() == 2);
    // canonical associates are monic: t + 1 then t^2 - 1
    CHECK(s.factors[0] == P{std::vector<Rat>{Rat(1), Rat(1)}});
    CHECK(s.factors[1] == P{std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}});
}

TEST_CASE("integer quotient is round-to-nearest") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-50, 50);
    for (int trial = 0; trial < 500; ++trial) {
        Int a(val(rng)), b(val(rng));
        if (b == 0) continue;
        Int q = ring_traits<Int>::quot(a, b);
        Int r = a - q * b;
        CHECK(abs(r) * 2 <= abs(b));
    }
}

TEST_CASE("prime field arithmetic") {
    FpScope scope(7);
    CHECK((Fp(3) * Fp(5)).v == 1);
    CHECK((Fp(3).inv() * Fp(3)).v == 1);
    CHECK(Fp(-1).v == 6);
    for (uint64_t x = 1; x < 7; ++x) CHECK((Fp(long(x)) * Fp(long(x)).inv()).v == 1);
    {
        FpScope inner(13);
        CHECK(Fp::p() == 13);
        CHECK((Fp(6) + Fp(8)).v == 1);
    }
    CHECK(Fp::p() == 7);
    CHECK_THROWS_AS(FpScope(6), std::domain_error);
}

TEST_CASE("rref rank, kernel and solve") {
    FpScope scope(5);
    // rank over Q
    SparseMatrix<Rat> a(3, 4);
    long vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) a.set(i, j, Rat(vals[i][j]));
    CHECK(field_rank(a) == 2);
    auto ker = kernel_basis(a);
    CHECK(ker.size() == 2); // rank + nullity = 4
    for (const auto& k : ker) {
        auto y = a.apply(k);
        for (const auto& v : y) CHECK(v == 0);
    }
    // solve consistent and inconsistent systems
    std::vector<Rat> b = {Rat(1), Rat(2), Rat(0)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    auto ax = a.apply(*x);
    for (int i = 0; i < 3; ++i) CHECK(ax[i] == b[i]);
    std::vector<Rat> bad = {Rat(1), Rat(3), Rat(0)}; // row2 = 2*row1 forces b2 = 2*b1
    CHECK(!solve(a, bad).has_value());

    // same story over F_5
    auto a5 = a.map<Fp>([](const Rat& v) { return Fp(v.get_num()); });
    CHECK(field_rank(a5) == 2);
    auto ker5 = kernel_basis(a5);
    CHECK(ker5.size() == 2);
    for (const auto& k : ker5) {
        auto y = a5.apply(k);
        for (const auto& v : y) CHECK(v == Fp(0));
    }
}

TEST_CASE("rref randomized consistency with rational rank") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> val(-4, 4), dim(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        int m = dim(rng), n = dim(rng);
        SparseMatrix<Int> a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (val(rng) > 1) a.set(i, j, Int(val(rng)));
        auto aq = a.map<Rat>([](const Int& v) { return Rat(v); });
        CHECK(field_rank(aq) == snf_rank(a));
        int r = field_rank(aq);
        CHECK(r + static_cast<int>(kernel_basis(aq).size()) == n);
    }
}
