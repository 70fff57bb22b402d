#include "refract/curve.hpp"

#include "refract/resultant.hpp"

namespace refract {

Rational InvolutionCurve::lead_z() const {
    auto cs = q.coeffs_in_v2();
    if (cs.size() < 2)
        throw NotReducible("curve polynomial has no z dependence");
    if (!cs.back().is_constant())
        throw NotReducible("curve polynomial has nonconstant leading z coefficient");
    return cs.back().lead();
}

CurveRat::CurveRat(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw NonExactDivision("curve function with zero denominator");
    reduce();
}

CurveRat CurveRat::from_x_poly(const UniPoly& p) {
    return CurveRat(BiPoly::from_unipoly(p.is_constant() ? p.retag(Var::x) : p),
                    BiPoly::constant(Rational(1)));
}

CurveRat CurveRat::from_z_poly(const UniPoly& p) {
    return CurveRat(BiPoly::from_unipoly(p.is_constant() ? p.retag(Var::z) : p),
                    BiPoly::constant(Rational(1)));
}

CurveRat CurveRat::from_x_ratfunc(const RatFunc& f) {
    return CurveRat(BiPoly::from_unipoly(f.num().retag(Var::x)),
                    BiPoly::from_unipoly(f.den().retag(Var::x)));
}

CurveRat CurveRat::constant(const Rational& r) {
    return CurveRat(BiPoly::constant(r), BiPoly::constant(Rational(1)));
}

void CurveRat::reduce() {
    if (num_.is_zero()) {
        den_ = BiPoly::constant(Rational(1));
        return;
    }
    // cancel common univariate factors: the pipeline's denominators are
    // products u(x) * v(z), so content cancellation reaches lowest terms
    UniPoly gx = gcd_poly(num_.content_v1(), den_.content_v1());
    if (gx.degree() > 0) {
        num_ = num_.divide_content_v1(gx);
        den_ = den_.divide_content_v1(gx);
    }
    UniPoly gz = gcd_poly(num_.content_v2(), den_.content_v2());
    if (gz.degree() > 0) {
        num_ = num_.divide_content_v2(gz);
        den_ = den_.divide_content_v2(gz);
    }
    auto [cd, dprim] = den_.primitive_parts();
    den_ = dprim;
    num_ = num_ * cd.inv();
}

CurveRat CurveRat::operator-() const {
    CurveRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

CurveRat operator+(const CurveRat& a, const CurveRat& b) {
    return CurveRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CurveRat operator-(const CurveRat& a, const CurveRat& b) {
    return CurveRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

CurveRat operator*(const CurveRat& a, const CurveRat& b) {
    return CurveRat(a.num_ * b.num_, a.den_ * b.den_);
}

CurveRat CurveRat::operator*(const Rational& s) const {
    CurveRat r;
    r.num_ = num_ * s;
    r.den_ = den_;
    if (s.is_zero())
        r.den_ = BiPoly::constant(Rational(1));
    return r;
}

bool operator==(const CurveRat& a, const CurveRat& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

double CurveRat::eval_double(double x, double z) const {
    return num_.eval_double(x, z) / den_.eval_double(x, z);
}

CurveRat::Normalized CurveRat::normalized() const {
    Normalized n;
    if (num_.is_zero()) {
        n.prefactor = Rational(0);
        n.num = BiPoly(Var::x, Var::z);
        n.den = BiPoly::constant(Rational(1));
        return n;
    }
    auto [c, prim] = num_.primitive_parts();
    n.prefactor = c;
    n.num = prim;
    n.den = den_;
    return n;
}

std::string CurveRat::str() const {
    if (den_ == BiPoly::constant(Rational(1)))
        return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

CurveRat derive_along_curve(const CurveRat& f, const InvolutionCurve& curve) {
    BiPoly p1 = BiPoly::from_unipoly(curve.psi1_prime);    // psi1'(x)
    BiPoly p2 = BiPoly::from_unipoly(curve.psi2_prime_z);  // psi2'(z)
    const BiPoly& N = f.num();
    const BiPoly& D = f.den();
    BiPoly dN = N.derivative(Var::x) * p2 + N.derivative(Var::z) * p1;
    BiPoly dD = D.derivative(Var::x) * p2 + D.derivative(Var::z) * p1;
    return CurveRat(dN * D - N * dD, p2 * D * D);
}

CurveRat compose_sigma(const UniPoly& g_in_x) {
    return CurveRat::from_z_poly(g_in_x.retag(Var::z));
}

CurveRat compose_sigma(const RatFunc& g_in_x) {
    return CurveRat(BiPoly::from_unipoly(g_in_x.num().retag(Var::z)),
                    BiPoly::from_unipoly(g_in_x.den().retag(Var::z)));
}

CurveReduction reduce_mod_curve(const CurveRat& f, const InvolutionCurve& curve) {
    if (curve.q.degree2() < 1)
        throw NotReducible("curve polynomial has no z dependence");
    curve.lead_z(); // validates the constant leading coefficient
    BiPoly nr = f.num().degree2() >= curve.q.degree2()
                    ? f.num().divmod_in_v2(curve.q).second
                    : f.num();
    BiPoly dr = f.den().degree2() >= curve.q.degree2()
                    ? f.den().divmod_in_v2(curve.q).second
                    : f.den();
    if (dr.is_zero())
        throw NotReducible("denominator vanishes identically on the curve");
    return {CurveRat(nr, dr), Rational(1)};
}

const char* cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::NONZERO: return "NONZERO";
        case CertStatus::ZERO_FOUND: return "ZERO_FOUND";
        case CertStatus::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

struct RatInterval {
    Rational lo, hi;
};

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo)
            lo = c[i];
        if (c[i] > hi)
            hi = c[i];
    }
    return {lo, hi};
}

RatInterval iv_pow(const RatInterval& a, int e) {
    RatInterval r{Rational(1), Rational(1)};
    for (int i = 0; i < e; ++i)
        r = iv_mul(r, a);
    return r;
}

RatInterval iv_eval(const BiPoly& p, const RatInterval& xs, const RatInterval& zs) {
    RatInterval acc{Rational(0), Rational(0)};
    for (const auto& [k, c] : p.terms()) {
        RatInterval t = iv_mul(iv_pow(xs, k.first), iv_pow(zs, k.second));
        t = iv_mul(t, {c, c});
        acc.lo += t.lo;
        acc.hi += t.hi;
    }
    return acc;
}

// The z-partner of x* solves psi2(z) = psi1(x*) in (z_left, 0); psi2 is
// strictly decreasing there, which makes exact rational bisection reliable.
bool bracket_sigma(const InvolutionCurve& curve, const RatInterval& xs, RatInterval& zs) {
    Rational tlo = curve.psi1.eval(xs.lo), thi = curve.psi1.eval(xs.hi);
    if (thi < tlo)
        std::swap(tlo, thi); // psi1 increasing on (0, x_r), but stay safe
    Rational cap = curve.psi2_z.eval(curve.z_left);
    if (tlo >= cap)
        return false; // the level never reaches into the z window
    Rational lo = curve.z_left, hi(0);
    // shrink [lo, hi] keeping psi2(lo) >= thi and psi2(hi) <= tlo
    for (int it = 0; it < 200; ++it) {
        Rational mid = (lo + hi) * Rational(1, 2);
        Rational v = curve.psi2_z.eval(mid);
        if (v >= thi)
            lo = mid;
        else if (v <= tlo)
            hi = mid;
        else
            break;
        if (hi - lo < Rational(1, 1000000))
            break;
    }
    zs = {lo, hi};
    return true;
}

} // namespace

NonvanishingCert nonvanishing_on_curve(const CurveRat& f, const InvolutionCurve& curve) {
    NonvanishingCert cert;
    if (f.is_zero()) {
        cert.status = CertStatus::ZERO_FOUND;
        cert.note = "function is identically zero";
        return cert;
    }
    auto norm = f.normalized();
    const BiPoly& N = norm.num;

    UniPoly r(Var::x);
    bool zfree = N.degree2() == 0;
    if (zfree) {
        r = N.coeffs_in_v2().empty() ? UniPoly(Var::x) : N.coeffs_in_v2()[0];
    } else {
        r = resultant_v2(curve.q, N);
        if (r.is_zero()) {
            cert.status = CertStatus::INCONCLUSIVE;
            BiPoly g = gcd_in_v2(curve.q, N);
            cert.note = "resultant vanishes identically; shared factor: " + g.str();
            return cert;
        }
    }
    cert.resultant = r;

    cert.stripped_x_pow = r.root_multiplicity(Rational(0));
    if (cert.stripped_x_pow)
        r = r.deflate(Rational(0), cert.stripped_x_pow);
    cert.stripped_xr_pow = r.root_multiplicity(curve.x_right);
    if (cert.stripped_xr_pow)
        r = r.deflate(curve.x_right, cert.stripped_xr_pow);

    auto [content, prim] = cert.resultant.primitive_parts();
    cert.content = content;
    cert.reduced = squarefree_part(r);
    cert.sturm_roots = cert.reduced.is_constant()
                           ? 0
                           : sturm_count(cert.reduced, Rational(0), curve.x_right);
    if (cert.sturm_roots == 0) {
        cert.status = CertStatus::NONZERO;
        return cert;
    }

    if (zfree) {
        // a zero of a z-free numerator inside (0, x_r) is a genuine zero
        auto roots = isolate_roots(cert.reduced, Rational(0), curve.x_right);
        auto iv = refine_root(cert.reduced, roots.front(), Rational(1, 1L << 30));
        cert.status = CertStatus::ZERO_FOUND;
        cert.witness = {iv.lo, iv.hi, Rational(0), Rational(0)};
        cert.note = "zero of a z-independent numerator";
        return cert;
    }

    // Root pairing: a resultant root only matters when its partner z lies in
    // the involution window and the numerator actually vanishes there. The
    // criterion in the source material stops at the resultant; this pairing
    // refinement is an extension and is flagged as such.
    cert.extended_check = true;
    auto roots = isolate_roots(cert.reduced, Rational(0), curve.x_right);
    for (const auto& root : roots) {
        RootInterval iv = refine_root(cert.reduced, root, Rational(1, 1L << 40));
        bool spurious = false;
        for (int round = 0; round < 24 && !spurious; ++round) {
            RatInterval xs{iv.lo, iv.hi};
            RatInterval zs;
            if (!bracket_sigma(curve, xs, zs)) {
                spurious = true;
                break;
            }
            RatInterval val = iv_eval(N, xs, zs);
            if (val.lo.sign() > 0 || val.hi.sign() < 0) {
                spurious = true;
                break;
            }
            iv = refine_root(cert.reduced, iv, (iv.hi - iv.lo) * Rational(1, 16));
        }
        if (!spurious) {
            RatInterval xs{iv.lo, iv.hi};
            RatInterval zs;
            bracket_sigma(curve, xs, zs);
            cert.status = CertStatus::ZERO_FOUND;
            cert.witness = {xs.lo, xs.hi, zs.lo, zs.hi};
            cert.note = "resultant root pairs with a z partner inside the window";
            return cert;
        }
    }
    cert.status = CertStatus::NONZERO;
    cert.note = "all resultant roots ruled out by z-window pairing";
    return cert;
}

} // namespace refract
