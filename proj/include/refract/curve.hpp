#pragma once

#include <array>
#include <optional>
#include <string>

#include "refract/bipoly.hpp"
#include "refract/ratfunc.hpp"
#include "refract/sturm.hpp"

namespace refract {

// The involution pairing x > 0 with z < 0 is represented implicitly by the
// curve q(x, z) = 0, where q is the denominator-cleared, integer-primitive
// multiple of psi1(x) - psi2(z). No closed form for sigma is ever used on
// the exact path.
struct InvolutionCurve {
    BiPoly q;                // vars (x, z)
    Rational clear_scale;    // q = clear_scale * (psi1(x) - psi2(z)), scale > 0
    UniPoly psi1;            // var x
    UniPoly psi2_z;          // psi2 retagged to z
    UniPoly psi1_prime;      // var x
    UniPoly psi2_prime_z;    // var z
    Rational x_right;        // x range (0, x_right)
    Rational z_left;         // z range (z_left, 0)
    std::optional<Rational> sigma_slope; // set when sigma(x) = a*x exactly

    // leading coefficient of q in z; always a nonzero constant here
    Rational lead_z() const;
};

// Rational function in (x, z) restricted to the involution curve. The
// denominators arising in the pipeline are products of univariate factors,
// so reduction cancels the bivariate content and any common univariate
// factors detectable by gcd.
class CurveRat {
  public:
    CurveRat() : num_(Var::x, Var::z), den_(BiPoly::constant(Rational(1))) {}
    CurveRat(BiPoly num, BiPoly den);
    static CurveRat from_x_poly(const UniPoly& p);
    static CurveRat from_z_poly(const UniPoly& p);
    static CurveRat from_x_ratfunc(const RatFunc& f);
    static CurveRat constant(const Rational& r);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool depends_on_z() const { return num_.degree2() > 0 || den_.degree2() > 0; }

    CurveRat operator-() const;
    friend CurveRat operator+(const CurveRat& a, const CurveRat& b);
    friend CurveRat operator-(const CurveRat& a, const CurveRat& b);
    friend CurveRat operator*(const CurveRat& a, const CurveRat& b);
    CurveRat operator*(const Rational& s) const;
    friend bool operator==(const CurveRat& a, const CurveRat& b); // cross-multiplied

    double eval_double(double x, double z) const;

    // value = prefactor * num / den with num, den integer-primitive and
    // positive-leading under lex(x > z); den is normalized this way already,
    // so only the numerator content is pulled out.
    struct Normalized {
        Rational prefactor;
        BiPoly num;
        BiPoly den;
    };
    Normalized normalized() const;

    std::string str() const;

  private:
    void reduce();

    BiPoly num_, den_;
};

// d/dx along the curve: total derivative with dz/dx = psi1'(x) / psi2'(z).
CurveRat derive_along_curve(const CurveRat& f, const InvolutionCurve& curve);

// Substitution x -> z: realizes g(sigma(x)) without a closed form for sigma.
CurveRat compose_sigma(const UniPoly& g_in_x);
CurveRat compose_sigma(const RatFunc& g_in_x);

// Remainders of numerator and denominator after division by q in z. The
// leading z-coefficient of q is constant, so the division is exact over the
// rationals and the value on the curve is preserved; the multiplier is
// reported for the record (always 1 with a constant leading coefficient).
struct CurveReduction {
    CurveRat value;
    Rational multiplier;
};
CurveReduction reduce_mod_curve(const CurveRat& f, const InvolutionCurve& curve);

enum class CertStatus { NONZERO, ZERO_FOUND, INCONCLUSIVE };
const char* cert_status_name(CertStatus s);

struct NonvanishingCert {
    CertStatus status = CertStatus::INCONCLUSIVE;
    UniPoly resultant;        // Res_z(q, numerator), or the numerator itself if z-free
    int stripped_x_pow = 0;   // factor x^m removed
    int stripped_xr_pow = 0;  // factor (x - x_right)^m removed
    Rational content;         // scalar content of the resultant before stripping
    UniPoly reduced;          // primitive squarefree part actually counted
    int sturm_roots = 0;
    bool extended_check = false; // root pairing against the z window was needed
    std::string note;
    std::optional<std::array<Rational, 4>> witness; // x_lo, x_hi, z_lo, z_hi
};

// Certifies that f has no zero on the curve branch over (0, x_right).
// The denominator must be certified separately (it is recorded by the
// caller); this routine works on the numerator.
NonvanishingCert nonvanishing_on_curve(const CurveRat& f, const InvolutionCurve& curve);

} // namespace refract
