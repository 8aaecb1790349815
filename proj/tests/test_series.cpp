#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "permlab/series.hpp"

using namespace permlab;

TEST_CASE("alternating constants") {
    CHECK(a_constant(1) == 1);
    CHECK(a_constant(2) == -1);
    CHECK(a_constant(7) == 1);
    CHECK_THROWS_AS(a_constant(0), PreconditionError);
}

TEST_CASE("recursion reproduces the listed values") {
    const auto A = catalan_by_recursion(4);
    CHECK(A[0] == 1);
    CHECK(A[1] == 1);
    CHECK(A[2] == 2);
    CHECK(A[3] == 5);
    CHECK(A[4] == 14);

    // the i=2 step decomposes as a_2 + 3 a_1 = -1 + 3
    CHECK(A[2] == BigInt(a_constant(2)) + 3 * BigInt(a_constant(1)));
}

TEST_CASE("recursion equals the closed form through order 64") {
    const auto A = catalan_by_recursion(64);
    for (int i = 0; i <= 64; ++i) CHECK(A[i] == catalan_closed_form(i));
    CHECK(catalan_closed_form(10) == 16796);
}

TEST_CASE("generating function dual routes") {
    const auto z0 = generating_function_value(0.0, 16);
    CHECK(z0.series == doctest::Approx(0.0));
    CHECK(z0.closed == doctest::Approx(0.0));

    const auto v = generating_function_value(3.0 / 16.0, 64);
    CHECK(v.closed == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(v.series - 1.0 / 3.0) <= 1e-9);

    const auto w = generating_function_value(0.2, 200);
    CHECK(std::abs(w.series - w.closed) <= 1e-8);

    for (double z : {0.05, 0.1, 0.15, 0.2, 0.24}) {
        const auto g = generating_function_value(z, 64);
        CHECK(std::abs(g.series - g.closed) <= g.tail_bound + 1e-12);
    }

    CHECK_THROWS_AS(generating_function_value(0.3, 16), PreconditionError);
}

TEST_CASE("substitution identity at the fixed point") {
    for (double rho : {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45}) {
        const auto res = verify_functional_equation(rho, 64);
        CHECK(res.ok);
        CHECK(res.residual <= 1e-12);
    }
    const auto tiny = verify_functional_equation(1e-6, 32);
    CHECK(tiny.residual <= 1e-10);
    CHECK_THROWS_AS(verify_functional_equation(0.6, 32), PreconditionError);
}

TEST_CASE("series arithmetic is exact convolution") {
    std::srand(13);
    const int order = 12;
    PowerSeries P(order), Q(order);
    for (int k = 0; k <= order; ++k) {
        P.set_coef(k, Rational(std::rand() % 21 - 10));
        Q.set_coef(k, Rational(std::rand() % 21 - 10));
    }
    const auto R = P * Q;
    for (int k = 0; k <= order; ++k) {
        Rational conv = 0;
        for (int j = 0; j <= k; ++j) conv += P.coef(j) * Q.coef(k - j);
        CHECK(R.coef(k) == conv);
    }

    const auto S = P + Q;
    const auto D = P - Q;
    for (int k = 0; k <= order; ++k) {
        CHECK(S.coef(k) == P.coef(k) + Q.coef(k));
        CHECK(D.coef(k) == P.coef(k) - Q.coef(k));
    }
}

TEST_CASE("series power and composition") {
    PowerSeries x(8);
    x.set_coef(1, 1);
    x.set_coef(2, 1);  // x + x^2

    const auto sq = x.pow(2);
    CHECK(sq.coef(2) == 1);
    CHECK(sq.coef(3) == 2);
    CHECK(sq.coef(4) == 1);
    CHECK(x.pow(0) == PowerSeries::constant(1, 8));

    // compose (1 + y)^2-ish polynomial with y = x + x^2
    PowerSeries outer(8);
    outer.set_coef(0, 1);
    outer.set_coef(1, 2);
    outer.set_coef(2, 1);
    const auto comp = outer.compose(x);
    // (1 + y)^2 with y = x + x^2 equals 1 + 2x + 3x^2 + 2x^3 + x^4
    CHECK(comp.coef(0) == 1);
    CHECK(comp.coef(1) == 2);
    CHECK(comp.coef(2) == 3);
    CHECK(comp.coef(3) == 2);
    CHECK(comp.coef(4) == 1);

    PowerSeries bad(8);
    bad.set_coef(0, 1);
    CHECK_THROWS_AS(outer.compose(bad), PreconditionError);

    CHECK(x.eval(0.5) == doctest::Approx(0.75));
}
