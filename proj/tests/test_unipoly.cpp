#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "refract/unipoly.hpp"

using namespace refract;

namespace {
UniPoly make(Var v, std::initializer_list<long> cs) {
    std::vector<Rational> c;
    for (long a : cs)
        c.emplace_back(a);
    return UniPoly(v, c);
}
} // namespace

TEST_CASE("basic arithmetic and normalization") {
    UniPoly p = make(Var::x, {1, 0, 1});  // 1 + x^2
    UniPoly q = make(Var::x, {-1, 0, -1});
    CHECK((p + q).is_zero());
    CHECK((p + q).degree() == -1);
    CHECK(p * q == make(Var::x, {-1, 0, -2, 0, -1}));
    CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("exact division") {
    // (x^2 - 1) / (x - 1) = x + 1
    UniPoly num = make(Var::x, {-1, 0, 1});
    UniPoly den = make(Var::x, {-1, 1});
    CHECK(num.exact_div(den) == make(Var::x, {1, 1}));
    CHECK_THROWS_AS(num.exact_div(make(Var::x, {1, 1, 1})), NonExactDivision);
}

TEST_CASE("derivative of the cubic potential") {
    // d/dx (x^2/2 - x^3/3) = x - x^2
    UniPoly psi(Var::x, {Rational(0), Rational(0), Rational(1, 2), Rational(-1, 3)});
    UniPoly expect(Var::x, {Rational(0), Rational(1), Rational(-1)});
    CHECK(psi.derivative() == expect);
    CHECK(UniPoly::constant(Rational(5)).derivative().is_zero());
}

TEST_CASE("evaluation and composition") {
    UniPoly p = make(Var::x, {0, 0, 3, -2}); // 3x^2 - 2x^3
    CHECK(p.eval(Rational(0)) == Rational(0));
    CHECK(p.eval(Rational(1, 2)) == Rational(1, 2));
    UniPoly g = make(Var::z, {1, 1}); // z + 1
    UniPoly comp = p.compose(g);
    CHECK(comp.var() == Var::z);
    CHECK(comp.eval(Rational(2)) == p.eval(Rational(3)));
}

TEST_CASE("gcd examples") {
    CHECK(gcd_poly(make(Var::x, {-1, 0, 1}), make(Var::x, {-1, 1})) == make(Var::x, {-1, 1}));
    // gcd(x - x^2, 2x) = x
    CHECK(gcd_poly(make(Var::x, {0, 1, -1}), make(Var::x, {0, 2})) == make(Var::x, {0, 1}));
    UniPoly p = make(Var::x, {2, 4});
    CHECK(gcd_poly(p, UniPoly(Var::x)) == p.monic());
    CHECK(gcd_poly(UniPoly(Var::x), UniPoly(Var::x)).is_zero());
}

TEST_CASE("gcd divides both and product division round-trips") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        UniPoly a = oracle::random_poly(rng, Var::x, 6, 8);
        UniPoly b = oracle::random_poly(rng, Var::x, 6, 8);
        if (a.is_zero() || b.is_zero())
            continue;
        UniPoly g = gcd_poly(a, b);
        CHECK(a.divmod(g).second.is_zero());
        CHECK(b.divmod(g).second.is_zero());
        CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("squarefree part") {
    UniPoly lin = make(Var::x, {-1, 1});
    CHECK(squarefree_part(lin * lin) == lin);
    UniPoly p = make(Var::x, {3, 1, 2});
    CHECK(squarefree_part(p) == p.monic());
    CHECK(squarefree_part(squarefree_part(p * p * p)) == p.monic());
}

TEST_CASE("root multiplicity and deflation") {
    UniPoly p = make(Var::x, {0, 0, 1}) * make(Var::x, {-2, 1}); // x^2 (x-2)
    CHECK(p.root_multiplicity(Rational(0)) == 2);
    CHECK(p.root_multiplicity(Rational(2)) == 1);
    CHECK(p.root_multiplicity(Rational(1)) == 0);
    CHECK(p.deflate(Rational(0), 2) == make(Var::x, {-2, 1}));
}

TEST_CASE("primitive parts") {
    UniPoly p(Var::x, {Rational(-2, 3), Rational(4, 9)});
    auto [c, prim] = p.primitive_parts();
    CHECK(c == Rational(2, 9));
    CHECK(prim == make(Var::x, {-3, 2}));
    CHECK(prim * c == p);

    auto [cn, pn] = (-p).primitive_parts();
    CHECK(cn == Rational(-2, 9));
    CHECK(pn.lead().sign() > 0);
}

TEST_CASE("variable mismatch is rejected") {
    UniPoly a = make(Var::x, {0, 1});
    UniPoly b = make(Var::z, {0, 1});
    CHECK_THROWS_AS(a * b, VariableMismatch);
    CHECK_NOTHROW(a * UniPoly::constant(Rational(2), Var::z));
}
