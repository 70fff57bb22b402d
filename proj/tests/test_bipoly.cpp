#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "refract/bipoly.hpp"
#include "refract/resultant.hpp"

using namespace refract;

namespace {

// q(x,z) = -2x^3 + 3x^2 - 6z^2, the first worked curve
BiPoly curve_q() {
    BiPoly q;
    q.add_term(3, 0, Rational(-2));
    q.add_term(2, 0, Rational(3));
    q.add_term(0, 2, Rational(-6));
    return q;
}

UniPoly upoly(Var v, std::initializer_list<long> cs) {
    std::vector<Rational> c;
    for (long a : cs)
        c.emplace_back(a);
    return UniPoly(v, c);
}

} // namespace

TEST_CASE("construction, arithmetic, evaluation") {
    BiPoly q = curve_q();
    CHECK(q.degree1() == 3);
    CHECK(q.degree2() == 2);
    CHECK(q.eval(Rational(0), Rational(0)) == Rational(0));
    CHECK(q.eval(Rational(1), Rational(0)) == Rational(1));
    BiPoly s = q - q;
    CHECK(s.is_zero());
    CHECK((q * q).degree1() == 6);
    CHECK(q.coeff(0, 2) == Rational(-6));
}

TEST_CASE("derivatives") {
    BiPoly q = curve_q();
    BiPoly qx = q.derivative(Var::x);
    CHECK(qx.coeff(2, 0) == Rational(-6));
    CHECK(qx.coeff(1, 0) == Rational(6));
    BiPoly qz = q.derivative(Var::z);
    CHECK(qz.coeff(0, 1) == Rational(-12));
}

TEST_CASE("substitutions and contents") {
    BiPoly q = curve_q();
    UniPoly at_half = q.substitute_v1(Rational(1, 2));
    CHECK(at_half.var() == Var::z);
    CHECK(at_half.coeff(0) == Rational(1, 2)); // 3/4 - 2/8
    CHECK(at_half.coeff(2) == Rational(-6));

    UniPoly diag = q.substitute_v2_linear(Rational(-1)); // z := -x
    CHECK(diag == upoly(Var::x, {0, 0, -3, -2}));

    // content in x of x^2 * (z + 1): gcd of rows
    BiPoly p;
    p.add_term(2, 1, Rational(2));
    p.add_term(2, 0, Rational(4));
    CHECK(p.content_v1() == upoly(Var::x, {0, 0, 1}));
    BiPoly r = p.divide_content_v1(p.content_v1());
    CHECK(r.coeff(0, 1) == Rational(2));
    CHECK(r.coeff(0, 0) == Rational(4));
}

TEST_CASE("division in z by a constant-lead divisor") {
    BiPoly q = curve_q();
    // z^3 mod q: z^3 = z*(3x^2-2x^3)/6 on the curve
    BiPoly z3 = BiPoly::monomial(0, 3, Rational(1));
    auto [quo, rem] = z3.divmod_in_v2(q);
    BiPoly expect;
    expect.add_term(2, 1, Rational(1, 2));
    expect.add_term(3, 1, Rational(-1, 3));
    CHECK(rem == expect);
    CHECK(quo * q + rem == z3);

    BiPoly bad;                      // leading z-coefficient depends on x
    bad.add_term(1, 2, Rational(1)); // x z^2
    bad.add_term(0, 0, Rational(1));
    CHECK_THROWS_AS(z3.divmod_in_v2(bad), NotReducible);
}

TEST_CASE("resultant conventions") {
    // Res_z(z - a, z - b) = a - b
    BiPoly za = BiPoly::monomial(0, 1, Rational(1)) - BiPoly::monomial(1, 0, Rational(1));
    BiPoly zb = BiPoly::monomial(0, 1, Rational(1)) - BiPoly::constant(Rational(5));
    UniPoly r = resultant_v2(za, zb);
    // Res_z(z - x, z - 5) = x - 5
    CHECK(r == upoly(Var::x, {-5, 1}));

    CHECK_THROWS_AS(resultant_v2(za, BiPoly::constant(Rational(3))), NotEliminable);
}

TEST_CASE("resultant detects shared factors") {
    BiPoly q = curve_q();
    BiPoly shared = q * (BiPoly::monomial(1, 1, Rational(1)) + BiPoly::constant(Rational(1)));
    UniPoly r = resultant_v2(q, shared);
    CHECK(r.is_zero());
    BiPoly g = gcd_in_v2(q, shared);
    CHECK(g.degree2() == 2); // recovers q itself up to scale
}

TEST_CASE("specialization property: Res commutes with evaluation") {
    std::mt19937_64 rng(99);
    BiPoly q = curve_q();
    std::uniform_int_distribution<long> cd(-5, 5);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 50; ++trial) {
        // random second polynomial of z-degree 2
        BiPoly m;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
                m.add_term(i, j, Rational(cd(rng)));
        if (m.degree2() < 1)
            continue;
        UniPoly res = resultant_v2(q, m);
        Rational x0 = oracle::random_rational(rng, 9);
        auto qs = q.substitute_v1(x0);
        auto ms = m.substitute_v1(x0);
        if (qs.degree() != q.degree2() || ms.degree() != m.degree2())
            continue; // leading coefficient vanished at x0
        Rational direct = oracle::sylvester_resultant(qs.coeffs(), ms.coeffs());
        CHECK(res.eval(x0) == direct);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("printed degree-7 independence resultant at random rational coefficients") {
    // Res_z(q, (c0 + c2 x) * psi2'(z) - (c1 + c3 z) * psi1'(x)) for the first
    // worked system reproduces the printed polynomial whose coefficients are
    // quadratic forms in c.
    std::mt19937_64 rng(4242);
    BiPoly q = curve_q();
    for (int trial = 0; trial < 20; ++trial) {
        Rational c0 = oracle::random_rational(rng), c1 = oracle::random_rational(rng),
                 c2 = oracle::random_rational(rng), c3 = oracle::random_rational(rng);
        // p = (c0 + c2 x) 2z - (c1 + c3 z)(x - x^2)
        BiPoly p;
        p.add_term(0, 1, c0 * Rational(2));
        p.add_term(1, 1, c2 * Rational(2));
        p.add_term(1, 0, -c1);
        p.add_term(2, 0, c1);
        p.add_term(1, 1, -c3);
        p.add_term(2, 1, c3);
        if (p.degree2() < 1)
            continue;
        UniPoly r = resultant_v2(q, p);

        std::vector<Rational> e(8, Rational(0));
        e[2] = Rational(12) * c0 * c0 - Rational(6) * c1 * c1;
        e[3] = Rational(-8) * c0 * c0 + Rational(24) * c0 * c2 - Rational(12) * c0 * c3 +
               Rational(12) * c1 * c1;
        e[4] = Rational(-16) * c0 * c2 + Rational(20) * c0 * c3 - Rational(6) * c1 * c1 +
               Rational(12) * c2 * c2 - Rational(12) * c2 * c3 + Rational(3) * c3 * c3;
        e[5] = Rational(-8) * c0 * c3 - Rational(8) * c2 * c2 + Rational(20) * c2 * c3 -
               Rational(8) * c3 * c3;
        e[6] = Rational(-8) * c2 * c3 + Rational(7) * c3 * c3;
        e[7] = Rational(-2) * c3 * c3;
        CHECK(r == UniPoly(Var::x, e));
    }
}

TEST_CASE("primitive parts with lex sign convention") {
    BiPoly p;
    p.add_term(2, 1, Rational(-4, 3));
    p.add_term(0, 0, Rational(2, 3));
    auto [c, prim] = p.primitive_parts();
    CHECK(c == Rational(-2, 3));
    CHECK(prim.coeff(2, 1) == Rational(2));
    CHECK(prim.coeff(0, 0) == Rational(-1));
}
