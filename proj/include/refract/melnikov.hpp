#pragma once

#include <span>
#include <string>
#include <vector>

#include "refract/bipoly.hpp"
#include "refract/ratfunc.hpp"
#include "refract/system.hpp"

namespace refract {

// Polynomial perturbation (p, q) of joint degree n, one coefficient table
// per component and side: p = sum a_ij x^i y^j, q = sum b_ij x^i y^j.
struct PolyPerturbation {
    int n = 1;
    std::vector<std::vector<Rational>> a_plus, b_plus, a_minus, b_minus; // [i][j], i + j <= n

    static PolyPerturbation zero(int n);
    // y * p(x) shape in the second component: q_side = y * sum coeffs[i] x^i
    static PolyPerturbation from_y_poly(const std::vector<Rational>& plus,
                                        const std::vector<Rational>& minus);

    const Rational& a(Side s, int i, int j) const;
    const Rational& b(Side s, int i, int j) const;
    Rational& a(Side s, int i, int j);
    Rational& b(Side s, int i, int j);
};

// One generating line integral: coeff * 2(+-) Int_0^{x_h} f(x,h) y(x)^{2s-1} dx.
struct Generator {
    Side side = Side::plus;
    std::string name;
    BiPoly f_num{Var::x, Var::h};
    UniPoly f_den{UniPoly::constant(Rational(1), Var::x)};
    int s = 1;
    int power = 0; // x-power index for monomial generators, -1 otherwise

    bool h_free() const { return f_num.degree2() == 0; }
    RatFunc f_x() const; // requires h_free()
    static Generator monomial(Side side, int i); // x^i y, s = 1
    static Generator from_ratfunc(Side side, const RatFunc& f, int s, std::string name);
};

// The reduced family: value(h) = h^(-h_power) * sum coeff_k * generator_k(h).
struct MelnikovFamily {
    std::vector<Generator> gens;
    int h_power = 0;
    std::vector<Rational> default_coeffs;
    bool structure_supported = true; // all integrands h-free
    std::vector<std::string> dropped_even; // even y-power monomials (integrate to zero)
};

// Combines the two components via the closed-loop reductions, drops even
// y-powers, and rewrites odd powers through y^2 = (h - Psi)/chi.
MelnikovFamily reduce_perturbation(const PolyPerturbation& pert, const RefractedSystem& sys);

// Predicted (x,h)-degrees of the collected integrands per side.
std::pair<int, int> structure_degrees(int n, int m1, int m2);

// Oriented integral from 0 to the turning point of g(x) * y(x)^ypow after
// the substitution x = x_h (1 - u^2); ypow >= -1 is integrable.
double arc_integral(const RefractedSystem& sys, Side side, double h,
                    const std::function<double(double)>& g, int ypow, double tol);

// Value of one generator: 2 * arc for the right side, -2 * arc for the left.
double generator_value(const Generator& gen, const RefractedSystem& sys, double h, double tol);

// I(h) = h^(-h_power) * sum coeffs[k] * generator_k(h), |error| <= tol.
double melnikov_eval(const MelnikovFamily& family, std::span<const double> coeffs,
                     const RefractedSystem& sys, double h, double tol);

// k-th derivative of one generator by the closed formula
// d^k/dh^k = c_k Int f y^(2(s-k)-1) with c_k = 2 prod_{i<k} (2(s-i)-1)/2.
double melnikov_derivative_eval(const Generator& gen, const RefractedSystem& sys, double h,
                                int k, double tol);
Rational derivative_constant(int s, int k); // the c_k above

// sigma-substituted integrand on (0, x_r): f(x) for the right side,
// -f(sigma(x)) sigma'(x) for the left side.
double l_value(const Generator& gen, const RefractedSystem& sys, double x, double tol = 1e-12);

// Sign alternations of the combination over a uniform h-grid in
// (delta, h0 - delta), delta = h0/grid, with one bisection refinement per
// alternation; values below 10*tol are treated as noise.
int count_sign_changes(const MelnikovFamily& family, std::span<const double> coeffs,
                       const RefractedSystem& sys, int grid, double tol);

// Wronskian of the first k generators at h, by two routes: the determinant
// of derivative values and the iterated-integral formula with the discrete
// Wronskian of the sigma-substituted integrands. k <= 2.
struct WronskianPair {
    double determinant_route;
    double integral_route;
};
WronskianPair wronskian_numeric(const MelnikovFamily& family, const RefractedSystem& sys,
                                double h, int k, double tol);

// Per-generator values on an h-grid; the scan command reuses this across
// coefficient draws.
struct GeneratorGrid {
    std::vector<double> hs;
    std::vector<std::vector<double>> values; // values[g][i] = gen g at hs[i]
    int h_power = 0;
};
GeneratorGrid tabulate_generators(const MelnikovFamily& family, const RefractedSystem& sys,
                                  int grid, double tol);
int count_sign_changes_on_grid(const GeneratorGrid& tab, const MelnikovFamily& family,
                               std::span<const double> coeffs, const RefractedSystem& sys,
                               double tol);

} // namespace refract
