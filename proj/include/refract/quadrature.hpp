#pragma once

#include <functional>

namespace refract {

// Adaptive tanh-sinh quadrature of f over (a, b). Nodes never touch the
// endpoints, so integrable endpoint behavior is fine; the integrands used
// here are smooth after the turning-point substitution.
double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol);

} // namespace refract
