#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "systems.hpp"

using namespace refract;
using namespace fixtures;

TEST_CASE("hypothesis checks pass on the worked systems") {
    for (auto sys : {example1(), example2(), example3()}) {
        auto rep = verify_h1(sys);
        CHECK(rep.pass);
        for (const auto& c : rep.conditions)
            CHECK(c.pass);
    }
}

TEST_CASE("hypothesis violations carry witnesses") {
    // psi1 = -x^2 turns the wrong way; assembled directly since domain
    // resolution rightly refuses such input
    RefractedSystem sys;
    sys.chi1 = sys.chi2 = one();
    sys.psi1 = upoly({Rational(0), Rational(0), Rational(-1)});
    sys.psi2 = upoly({Rational(0), Rational(0), Rational(1)});
    sys.x_left = Rational(-1);
    sys.x_right = Rational(1);
    sys.h0 = Rational(1, 2);
    auto rep = verify_h1(sys);
    CHECK_FALSE(rep.pass);
    bool found = false;
    for (const auto& c : rep.conditions)
        if (!c.pass && c.name.find("psi1'") != std::string::npos) {
            found = true;
            CHECK_FALSE(c.witness.empty());
        }
    CHECK(found);
    CHECK_THROWS_AS(require_h1(sys), H1Violation);

    // refraction condition: chi1(0) != chi2(0)
    RefractedSystem sys2 = sys;
    sys2.psi1 = sys.psi2;
    sys2.chi2 = UniPoly::constant(Rational(2), Var::x);
    auto rep2 = verify_h1(sys2);
    CHECK_FALSE(rep2.pass);

    // an explicit h0 above the annulus cap of a zone is rejected
    CHECK_THROWS_AS(make_system(one(), one(), sys.psi2, sys.psi2, Rational(-1), Rational(1),
                                Rational(2)),
                    DomainError);
}

TEST_CASE("annulus ranges of the worked systems") {
    CHECK(annulus_range(example1()).h_max == Rational(1, 6));
    CHECK(annulus_range(example2()).h_max == Rational(1, 4));
    CHECK(annulus_range(example3()).h_max == Rational(1, 6));
    CHECK(annulus_range(example1()).h_min == Rational(0));
}

TEST_CASE("auto domain resolution") {
    auto s1 = example1();
    CHECK(s1.x_right == Rational(1));
    // x_left is a certified bound at or below -1/sqrt(6)
    CHECK(s1.x_left.to_double() <= -1.0 / std::sqrt(6.0) + 1e-12);
    CHECK(s1.x_left.to_double() == doctest::Approx(-1.0 / std::sqrt(6.0)).epsilon(1e-6));

    auto s2 = example2();
    CHECK(s2.x_right == Rational(1, 2));
    CHECK(s2.x_left.to_double() == doctest::Approx(-0.25).epsilon(1e-9));

    auto s3 = example3();
    CHECK(s3.x_right == Rational(1));
    CHECK(s3.x_left == Rational(-1));

    // unbounded on both sides: explicit h0 required
    UniPoly psi = upoly({Rational(0), Rational(0), Rational(1)});
    CHECK_THROWS_AS(
        make_system(one(), one(), psi, psi, std::nullopt, std::nullopt, std::nullopt),
        DomainError);
    CHECK_NOTHROW(
        make_system(one(), one(), psi, psi, std::nullopt, std::nullopt, Rational(1)));
}

TEST_CASE("curve construction") {
    auto c1 = build_curve(example1());
    BiPoly q_expect;
    q_expect.add_term(3, 0, Rational(-2));
    q_expect.add_term(2, 0, Rational(3));
    q_expect.add_term(0, 2, Rational(-6));
    CHECK(c1.q == q_expect);
    CHECK(c1.clear_scale == Rational(1, 6));
    CHECK_FALSE(c1.sigma_slope.has_value());

    auto c3 = build_curve(example3());
    BiPoly q3;
    q3.add_term(2, 0, Rational(3));
    q3.add_term(3, 0, Rational(-2));
    q3.add_term(0, 2, Rational(-3));
    q3.add_term(0, 3, Rational(-2));
    CHECK(c3.q == q3);
    REQUIRE(c3.sigma_slope.has_value());
    CHECK(*c3.sigma_slope == Rational(-1));

    // symmetric potential: q proportional to x^2 - z^2, slope -1
    UniPoly psi = upoly({Rational(0), Rational(0), Rational(1)});
    auto sym = make_system(one(), one(), psi, psi, Rational(-1), Rational(1), Rational(1, 2));
    auto cs = build_curve(sym);
    BiPoly qs;
    qs.add_term(2, 0, Rational(1));
    qs.add_term(0, 2, Rational(-1));
    CHECK(cs.q == qs);
    REQUIRE(cs.sigma_slope.has_value());
    CHECK(*cs.sigma_slope == Rational(-1));
}

TEST_CASE("involution evaluation") {
    auto s3 = example3();
    CHECK(sigma_eval(s3, 0.5) == doctest::Approx(-0.5).epsilon(1e-10));

    auto s1 = example1();
    CHECK(sigma_eval(s1, 0.5) == doctest::Approx(-std::sqrt(1.0 / 12.0)).epsilon(1e-10));
    CHECK(std::abs(sigma_eval(s1, 1e-7)) < 1e-3); // sigma(0+) -> 0-
    CHECK(sigma_eval(s1, 1e-7) < 0);
    CHECK_THROWS_AS(sigma_eval(s1, 2.0), DomainError);
}

TEST_CASE("involution round trip on both sides") {
    for (auto sys : {example1(), example2(), example3()}) {
        double xr = sys.x_right.to_double(), xl = sys.x_left.to_double();
        for (int i = 1; i <= 50; ++i) {
            double x = xr * i / 51.0;
            double z = sigma_eval(sys, x);
            CHECK(z > xl);
            CHECK(z < 0);
            CHECK(std::abs(sigma_eval(sys, z) - x) <= 1e-10);
        }
        for (int i = 1; i <= 50; ++i) {
            double x = xl * i / 51.0;
            double z = sigma_eval(sys, x);
            CHECK(std::abs(sigma_eval(sys, z) - x) <= 1e-10);
        }
    }
}

TEST_CASE("curve membership of the involution graph") {
    for (auto sys : {example1(), example2(), example3()}) {
        auto curve = build_curve(sys);
        for (int i = 1; i <= 20; ++i) {
            double x = sys.x_right.to_double() * i / 21.0;
            double z = sigma_eval(sys, x);
            double qv = curve.q.eval_double(x, z);
            double scale = std::max(1.0, std::abs(curve.q.eval_double(x, -z)));
            CHECK(std::abs(qv) / scale <= 1e-10);
        }
    }
}

TEST_CASE("turning points") {
    UniPoly psi = upoly({Rational(0), Rational(0), Rational(1)});
    auto sq = make_system(one(), one(), psi, psi, Rational(-1), Rational(1), Rational(1, 2));
    CHECK(turning_point(sq, Side::plus, 0.25) == doctest::Approx(0.5).epsilon(1e-10));

    auto s1 = example1();
    CHECK(turning_point(s1, Side::plus, 1.0 / 6.0 - 1e-9) == doctest::Approx(1.0).epsilon(1e-3));

    auto s2 = example2();
    CHECK(turning_point(s2, Side::plus, 0.125) ==
          doctest::Approx((1.0 - std::sqrt(0.5)) / 2.0).epsilon(1e-10));

    CHECK_THROWS_AS(turning_point(s1, Side::plus, 0.2), DomainError);
    CHECK_THROWS_AS(turning_point(s1, Side::plus, -0.1), DomainError);
}

TEST_CASE("annulus boundary behavior") {
    for (auto sys : {example1(), example2(), example3()}) {
        double h0 = sys.h0.to_double();
        double h_in = h0 * (1 - 1e-6), h_out = h0 * (1 + 1e-6);
        CHECK_NOTHROW(turning_point(sys, Side::plus, h_in));
        CHECK_NOTHROW(turning_point(sys, Side::minus, h_in));
        bool fails = false;
        try {
            turning_point(sys, Side::plus, h_out);
            turning_point(sys, Side::minus, h_out);
        } catch (const DomainError&) {
            fails = true;
        }
        CHECK(fails);
    }
}

TEST_CASE("branch values") {
    auto s1 = example1();
    // exactly zero at the turning point: h = psi1(1/2) = 1/12
    CHECK(branch_y(s1, Side::plus, 1.0 / 12.0, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
    // at x = 0 the branch meets the section at a(h)
    CHECK(branch_y(s1, Side::plus, 0.1, 0.0) == doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));
    CHECK(endpoint_a(s1, 0.1) == doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));
    // direct arithmetic: h = 1/12, x = 0.4, psi1(0.4) = 0.08 - 0.064/3
    double rad = 1.0 / 12.0 - (0.08 - 0.064 / 3.0);
    CHECK(branch_y(s1, Side::plus, 1.0 / 12.0, 0.4) == doctest::Approx(std::sqrt(rad)).epsilon(1e-12));
    CHECK_THROWS_AS(branch_y(s1, Side::plus, 0.05, 0.9), DomainError);

    auto s2 = example2();
    // chi = 1/2 scales the branch: y = sqrt((h - psi)/chi)
    double h = 0.1, x = 0.05, psi = -x * x + x;
    CHECK(branch_y(s2, Side::plus, h, x) == doctest::Approx(std::sqrt((h - psi) / 0.5)).epsilon(1e-12));
}

TEST_CASE("branch matching across the switching line") {
    for (auto sys : {example1(), example2(), example3()}) {
        double h = sys.h0.to_double() * 0.55;
        double xh = turning_point(sys, Side::plus, h);
        for (int i = 1; i < 10; ++i) {
            double x = xh * i / 10.0;
            double z = sigma_eval(sys, x);
            CHECK(branch_y(sys, Side::plus, h, x) ==
                  doctest::Approx(branch_y(sys, Side::minus, h, z)).epsilon(1e-10));
        }
    }
}

TEST_CASE("balance values") {
    // even kappa with sigma = -x balances to zero
    auto s3 = example3();
    UniPoly even = upoly({Rational(1), Rational(0), Rational(3)});
    CHECK(balance(even, even, s3, 0.3) == doctest::Approx(0.0).epsilon(1e-12));
    UniPoly id = upoly({Rational(0), Rational(1)});
    CHECK(balance(id, id, s3, 0.3) == doctest::Approx(0.3).epsilon(1e-10));

    // kappa1 = x, kappa2 = x^2 on the second system at x = 1/4
    auto s2 = example2();
    UniPoly sqr = upoly({Rational(0), Rational(0), Rational(1)});
    CHECK(balance(id, sqr, s2, 0.25) == doctest::Approx(0.107421875).epsilon(1e-10));
}
