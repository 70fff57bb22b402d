#pragma once

#include <optional>
#include <string>
#include <vector>

#include "refract/curve.hpp"
#include "refract/unipoly.hpp"

namespace refract {

enum class Side { plus, minus };

// Two-zone refracted Hamiltonian model H = chi(x) y^2 + Psi(x) split at
// x = 0, with a period annulus around the origin for h in (0, h0).
struct RefractedSystem {
    UniPoly chi1, chi2, psi1, psi2; // all in x
    Rational x_left, x_right;       // x_left < 0 < x_right
    Rational h0;
    bool x_left_exact = true;  // false when stored as a certified bound
    bool x_right_exact = true;
    bool h0_exact = true;

    const UniPoly& chi(Side s) const { return s == Side::plus ? chi1 : chi2; }
    const UniPoly& psi(Side s) const { return s == Side::plus ? psi1 : psi2; }
};

// Resolves the domain endpoints and the annulus energy bound. Any of the
// optional arguments may be absent ("auto"); an unbounded annulus without an
// explicit h0 is an error.
RefractedSystem make_system(const UniPoly& chi1, const UniPoly& chi2, const UniPoly& psi1,
                            const UniPoly& psi2, std::optional<Rational> x_left,
                            std::optional<Rational> x_right, std::optional<Rational> h0);

struct H1Condition {
    std::string name;
    bool pass;
    std::string witness; // set when the condition fails
};

struct H1Report {
    bool pass = true;
    std::vector<H1Condition> conditions;
};

// Certifies the sign hypotheses, the zero conditions at the origin and the
// refraction (equal normal components) condition, exactly.
H1Report verify_h1(const RefractedSystem& sys);
void require_h1(const RefractedSystem& sys); // throws H1Violation with the first failure

struct AnnulusRange {
    Rational h_min, h_max;
    bool h_max_exact;
};
AnnulusRange annulus_range(const RefractedSystem& sys);

InvolutionCurve build_curve(const RefractedSystem& sys);

// y-endpoint of the section at x = 0: a(h) = sqrt(h / chi(0)).
double endpoint_a(const RefractedSystem& sys, double h);

// Unique z on the opposite side with Psi_other(z) = Psi_side(x); defined for
// x on either side of 0.
double sigma_eval(const RefractedSystem& sys, double x, double tol = 1e-12);

// Root of Psi_side(x) = h between 0 and the domain boundary.
double turning_point(const RefractedSystem& sys, Side side, double h, double tol = 1e-12);

// Nonnegative branch sqrt((h - Psi(x)) / chi(x)).
double branch_y(const RefractedSystem& sys, Side side, double h, double x);

// (kappa(x) - kappa(sigma(x))) / 2 with kappa piecewise k1 / k2.
double balance(const UniPoly& k1, const UniPoly& k2, const RefractedSystem& sys, double x,
               double tol = 1e-12);

} // namespace refract
