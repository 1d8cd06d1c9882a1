#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/qpoly.hpp"

using namespace artin;

TEST_CASE("q-integers") {
    CHECK(q_integer(0) == QTPoly(Int(1)));
    CHECK(q_integer(1) == QTPoly(Int(1)));
    QTPoly expect = QTPoly(Int(1)) + QTPoly::q(1) + QTPoly::q(2);
    CHECK(q_integer(3) == expect);
    // [4]_q vanishes at q = -1
    CHECK(q_integer(4).specialize_q_minus1() == TPoly());
    CHECK(q_integer(3).specialize_q_minus1() == TPoly(Int(1)));
}

TEST_CASE("gaussian binomial small values") {
    CHECK(gauss_binomial(0, 0) == QTPoly(Int(1)));
    CHECK(gauss_binomial(5, 0) == QTPoly(Int(1)));
    CHECK(gauss_binomial(5, 5) == QTPoly(Int(1)));
    CHECK(gauss_binomial(2, 1) == q_integer(2));
    // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    QTPoly g42 = QTPoly(Int(1)) + QTPoly::q(1) + QTPoly::monomial(2, 0, Int(2)) +
                 QTPoly::q(3) + QTPoly::q(4);
    CHECK(gauss_binomial(4, 2) == g42);
    CHECK(g42.specialize_q_minus1() == TPoly(Int(2)));
    CHECK_THROWS_AS(gauss_binomial(3, 4), std::domain_error);
}

TEST_CASE("gaussian binomial properties") {
    for (unsigned m = 0; m <= 16; ++m) {
        for (unsigned i = 0; i <= m; ++i) {
            // symmetry
            CHECK(gauss_binomial(m, i) == gauss_binomial(m, m - i));
            // Pascal-type recurrence
            if (i >= 1 && i <= m - 1 && m >= 1) {
                QTPoly rhs = gauss_binomial(m - 1, i - 1) +
                             QTPoly::q(i) * gauss_binomial(m - 1, i);
                CHECK(gauss_binomial(m, i) == rhs);
            }
            // closed form of the q = -1 specialization
            TPoly sp = gauss_binomial(m, i).specialize_q_minus1();
            Int expect = gauss_binomial_m1(m, i);
            if (expect == 0)
                CHECK(sp == TPoly());
            else
                CHECK(sp == TPoly(expect));
        }
    }
    CHECK(gauss_binomial_m1(2, 1) == 0);
    CHECK(gauss_binomial_m1(4, 2) == 2);
    CHECK(gauss_binomial_m1(6, 2) == 3);
}

TEST_CASE("primed binomials at q = -1") {
    // l = 1: single marked cell, coefficient of the unmarked face
    CHECK(primed_binomial_m1(1, 0) == TPoly({Int(1), Int(1)})); // 1 + t
    // l = 2
    CHECK(primed_binomial_m1(2, 0) == TPoly({Int(1), Int(0), Int(-1)})); // 1 - t^2
    CHECK(primed_binomial_m1(2, 1) == TPoly());
    // consistency with the bivariate definition
    for (unsigned m = 0; m <= 10; ++m)
        for (unsigned i = 0; i <= m; ++i)
            CHECK(primed_binomial(m, i).specialize_q_minus1() == primed_binomial_m1(m, i));
}

TEST_CASE("t-polynomial arithmetic") {
    TPoly one_plus_t({Int(1), Int(1)});
    TPoly one_minus_t({Int(1), Int(-1)});
    TPoly prod = one_plus_t * one_minus_t;
    CHECK(prod == TPoly({Int(1), Int(0), Int(-1)}));
    CHECK(prod.divide_exact(one_plus_t) == one_minus_t);
    CHECK(prod.divide_exact(one_minus_t) == one_plus_t);
    CHECK_THROWS_AS(one_plus_t.divide_exact(TPoly::t()), std::domain_error);
    TPoly six(Int(6));
    CHECK(six.divide_exact(Int(3)) == TPoly(Int(2)));
    CHECK_THROWS_AS(six.divide_exact(Int(4)), std::domain_error);
    CHECK(one_plus_t.eval(Int(-1)) == 0);
    CHECK(one_plus_t.eval(Int(2)) == 3);
}
