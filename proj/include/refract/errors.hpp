#pragma once

#include <stdexcept>
#include <string>

namespace refract {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact algebra
struct ParseError : Error { using Error::Error; };
struct NonExactDivision : Error { using Error::Error; };
struct VariableMismatch : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct NotEliminable : Error { using Error::Error; };

// curve field
struct NotReducible : Error { using Error::Error; };

// system / melnikov
struct DomainError : Error { using Error::Error; };
struct H1Violation : Error { using Error::Error; };
struct OrderError : Error { using Error::Error; };

// certification
struct NotPromotable : Error { using Error::Error; };
struct ExactPathUnsupported : Error { using Error::Error; };

} // namespace refract
