#pragma once

#include <vector>

#include "refract/unipoly.hpp"

namespace refract {

// Exact count of distinct real roots of p in the open interval (a, b).
// Roots at the endpoints are removed by deflation first, so they are never
// counted. Throws ZeroPolynomial for the zero polynomial.
int sturm_count(const UniPoly& p, const Rational& a, const Rational& b);

struct RootInterval {
    Rational lo, hi; // p has exactly one root in (lo, hi); sign(p(lo)) != sign(p(hi))
};

// Isolating intervals, left to right, for the distinct roots of p inside
// (a, b). Endpoint roots are excluded, matching sturm_count.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b);

// Shrink an isolating interval by bisection until hi - lo <= width.
RootInterval refine_root(const UniPoly& squarefree, RootInterval iv, const Rational& width);

// Smallest root of p in (a, b), reported exactly when it is rational
// (rational root theorem), otherwise as a refined isolating interval.
struct SmallestRoot {
    bool found = false;
    bool exact = false;
    Rational value;    // set when exact
    RootInterval iv{}; // set when !exact
};
SmallestRoot smallest_root_in(const UniPoly& p, const Rational& a, const Rational& b,
                              const Rational& refine_width);

} // namespace refract
