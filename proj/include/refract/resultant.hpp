#pragma once

#include "refract/bipoly.hpp"

namespace refract {

// Res_{v2}(a, b) as a polynomial in v1, by fraction-free Bareiss elimination
// of the Sylvester matrix. Both arguments need positive degree in v2.
// Identically zero exactly when a and b share a factor of positive
// v2-degree (after content adjustment).
UniPoly resultant_v2(const BiPoly& a, const BiPoly& b);

// gcd of a and b viewed in Q(v1)[v2], monic in v2 with content removed;
// used to name the shared factor when a resultant vanishes identically.
BiPoly gcd_in_v2(const BiPoly& a, const BiPoly& b);

} // namespace refract
