#pragma once

// Fixture systems used across the test suites: the three worked refracted
// Hamiltonian models.

#include "refract/system.hpp"

namespace fixtures {

using namespace refract;

inline UniPoly upoly(std::initializer_list<Rational> cs, Var v = Var::x) {
    return UniPoly(v, std::vector<Rational>(cs));
}

inline UniPoly one() {
    return UniPoly::constant(Rational(1), Var::x);
}

// psi1 = x^2/2 - x^3/3, psi2 = x^2, chi = 1, x_r = 1, h0 = 1/6
inline RefractedSystem example1() {
    UniPoly psi1 = upoly({Rational(0), Rational(0), Rational(1, 2), Rational(-1, 3)});
    UniPoly psi2 = upoly({Rational(0), Rational(0), Rational(1)});
    return make_system(one(), one(), psi1, psi2, std::nullopt, Rational(1), std::nullopt);
}

// psi1 = -x^2 + x, psi2 = -x, chi = 1/2, x_r = 1/2, h0 = 1/4
inline RefractedSystem example2() {
    UniPoly psi1 = upoly({Rational(0), Rational(1), Rational(-1)});
    UniPoly psi2 = upoly({Rational(0), Rational(-1)});
    UniPoly half = UniPoly::constant(Rational(1, 2), Var::x);
    return make_system(half, half, psi1, psi2, std::nullopt, std::nullopt, std::nullopt);
}

// psi1 = x^2/2 - x^3/3, psi2 = x^2/2 + x^3/3, chi = 1, sigma = -x
inline RefractedSystem example3() {
    UniPoly psi1 = upoly({Rational(0), Rational(0), Rational(1, 2), Rational(-1, 3)});
    UniPoly psi2 = upoly({Rational(0), Rational(0), Rational(1, 2), Rational(1, 3)});
    return make_system(one(), one(), psi1, psi2, std::nullopt, std::nullopt, std::nullopt);
}

} // namespace fixtures
