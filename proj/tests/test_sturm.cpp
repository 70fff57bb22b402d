#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "refract/sturm.hpp"

using namespace refract;

namespace {
UniPoly make(std::initializer_list<long> cs) {
    std::vector<Rational> c;
    for (long a : cs)
        c.emplace_back(a);
    return UniPoly(Var::x, c);
}
} // namespace

TEST_CASE("basic counts") {
    UniPoly p = make({-1, 0, 1}); // x^2 - 1
    CHECK(sturm_count(p, Rational(0), Rational(2)) == 1);
    CHECK(sturm_count(p, Rational(-2), Rational(2)) == 2);
    CHECK(sturm_count(p, Rational(-1, 2), Rational(1, 2)) == 0);
    CHECK_THROWS_AS(sturm_count(UniPoly(Var::x), Rational(0), Rational(1)), ZeroPolynomial);
}

TEST_CASE("open interval: endpoint roots excluded by deflation") {
    UniPoly p = make({0, 1, -1}); // x(1-x): roots at both endpoints of (0,1)
    CHECK(sturm_count(p, Rational(0), Rational(1)) == 0);
    UniPoly q = make({0, 0, 1}); // x^2, double root at left endpoint
    CHECK(sturm_count(q, Rational(0), Rational(1)) == 0);
    CHECK(sturm_count(q, Rational(-1), Rational(1)) == 1);
}

TEST_CASE("printed quintic square has no roots in (0,1)") {
    // (187 x^5 - 1122 x^4 + 2738 x^3 - 3438 x^2 + 2250 x - 630)^2
    UniPoly base = make({-630, 2250, -3438, 2738, -1122, 187});
    CHECK(sturm_count(base * base, Rational(0), Rational(1)) == 0);
}

TEST_CASE("first certificate numerator has no roots in (0,1)") {
    UniPoly w = make({216, -798, 1146, -748, 187});
    CHECK(sturm_count(w, Rational(0), Rational(1)) == 0);
    CHECK(sturm_count(w, Rational(-100), Rational(100)) == 0); // all roots complex
}

TEST_CASE("agrees with grid + bisection counting on random polynomials") {
    std::mt19937_64 rng(20240917);
    const Rational a(-5, 2), b(5, 2);
    for (int i = 0; i < 100; ++i) {
        UniPoly p = oracle::random_poly(rng, Var::x, 12, 20);
        if (p.is_constant())
            continue;
        UniPoly sf = squarefree_part(p);
        if (sf.is_constant())
            continue;
        int got = sturm_count(sf, a, b);
        int want = oracle::grid_root_count(sf, a, b, 10000);
        CHECK(got == want);
    }
}

TEST_CASE("isolation and refinement") {
    UniPoly p = make({-2, 0, 1}) * make({-3, 1}); // (x^2-2)(x-3)
    auto roots = isolate_roots(p, Rational(0), Rational(10));
    REQUIRE(roots.size() == 2);
    auto iv = refine_root(squarefree_part(p), roots[0], Rational(1, 1000000));
    double mid = ((iv.lo + iv.hi) * Rational(1, 2)).to_double();
    CHECK(mid == doctest::Approx(1.41421356).epsilon(1e-5));

    auto all = isolate_roots(p, Rational(-10), Rational(10));
    CHECK(all.size() == 3);
}

TEST_CASE("smallest root detection") {
    // psi1' = x - x^2: smallest positive root in (0, 4) is 1, exactly
    UniPoly d = make({0, 1, -1});
    auto r = smallest_root_in(d, Rational(0), Rational(4), Rational(1, 1 << 20));
    REQUIRE(r.found);
    CHECK(r.exact);
    CHECK(r.value == Rational(1));

    // x^2 - 2: irrational root, interval only
    auto s = smallest_root_in(make({-2, 0, 1}), Rational(0), Rational(4), Rational(1, 1 << 20));
    REQUIRE(s.found);
    CHECK_FALSE(s.exact);
    CHECK(s.iv.lo.to_double() == doctest::Approx(1.4142).epsilon(1e-3));

    auto none = smallest_root_in(make({1, 0, 1}), Rational(-4), Rational(4), Rational(1, 1024));
    CHECK_FALSE(none.found);
}
