#include "refract/system.hpp"

#include <cmath>

namespace refract {

namespace {

// Cauchy bound: all real roots lie in (-B, B).
Rational root_bound(const UniPoly& p) {
    if (p.degree() < 1)
        return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = (p.coeff(i) / p.lead()).abs();
        if (a > m)
            m = a;
    }
    return m + Rational(1);
}

// Smallest positive root of p, either exact or a certified rational lower
// bound just below it; found == false when p has no positive root.
struct FirstRoot {
    bool found = false;
    bool exact = false;
    Rational value;
};
FirstRoot first_positive_root(const UniPoly& p) {
    FirstRoot out;
    if (p.degree() < 1)
        return out;
    Rational bound = root_bound(p);
    auto r = smallest_root_in(p, Rational(0), bound, Rational(1, mpz_class(1) << 40));
    if (!r.found)
        return out;
    out.found = true;
    out.exact = r.exact;
    out.value = r.exact ? r.value : r.iv.lo;
    return out;
}

UniPoly mirror(const UniPoly& p) {
    std::vector<Rational> c(p.coeffs());
    for (size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return UniPoly(p.var(), c);
}

// Rational bisection for Psi(x) = target on the positive axis, Psi strictly
// increasing on (0, hi]; returns a bracket endpoint at or beyond the root.
Rational solve_level_up(const UniPoly& psi, const Rational& target, Rational hi,
                        const Rational& width, bool outer) {
    Rational lo(0);
    while (psi.eval(hi) < target)
        hi = hi * Rational(2);
    while (hi - lo > width) {
        Rational mid = (lo + hi) * Rational(1, 2);
        if (psi.eval(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return outer ? hi : lo;
}

} // namespace

RefractedSystem make_system(const UniPoly& chi1, const UniPoly& chi2, const UniPoly& psi1,
                            const UniPoly& psi2, std::optional<Rational> x_left,
                            std::optional<Rational> x_right, std::optional<Rational> h0) {
    RefractedSystem sys;
    sys.chi1 = chi1;
    sys.chi2 = chi2;
    sys.psi1 = psi1;
    sys.psi2 = psi2;
    if (psi1.degree() < 1 || psi2.degree() < 1)
        throw DomainError("potentials must be nonconstant");

    // positive side: the monotone window ends at the first zero of psi1'*chi1
    std::optional<Rational> xr = x_right;
    if (!xr) {
        auto r = first_positive_root(psi1.derivative() * chi1);
        if (r.found) {
            xr = r.value;
            sys.x_right_exact = r.exact;
        }
    }
    std::optional<Rational> xl = x_left;
    if (!xl) {
        auto r = first_positive_root(mirror(psi2.derivative() * chi2));
        if (r.found) {
            xl = -r.value;
            sys.x_left_exact = r.exact;
        }
    }

    std::optional<Rational> cap_plus, cap_minus;
    if (xr)
        cap_plus = psi1.eval(*xr);
    if (xl)
        cap_minus = psi2.eval(*xl);

    if (h0) {
        sys.h0 = *h0;
        if (sys.h0 <= Rational(0))
            throw DomainError("h0 must be positive");
        if ((cap_plus && sys.h0 > *cap_plus) || (cap_minus && sys.h0 > *cap_minus))
            throw DomainError("h0 exceeds the annulus bound of a zone");
    } else {
        if (!cap_plus && !cap_minus)
            throw DomainError("unbounded annulus: explicit h0 required");
        if (cap_plus && cap_minus)
            sys.h0 = std::min(*cap_plus, *cap_minus);
        else
            sys.h0 = cap_plus ? *cap_plus : *cap_minus;
        sys.h0_exact = sys.x_right_exact && sys.x_left_exact;
    }

    // fill in any still-missing endpoint so that the x window covers every
    // turning point up to h0
    const Rational width(1, mpz_class(1) << 40);
    if (!xr)
        xr = solve_level_up(psi1, sys.h0, Rational(1), width, /*outer=*/true);
    if (!xl) {
        UniPoly m = mirror(psi2);
        xl = -solve_level_up(m, sys.h0, Rational(1), width, /*outer=*/true);
        sys.x_left_exact = false;
    }
    sys.x_right = *xr;
    sys.x_left = *xl;
    if (!(sys.x_left < Rational(0) && Rational(0) < sys.x_right))
        throw DomainError("domain must straddle x = 0");
    return sys;
}

namespace {

// Positivity of p on the open interval: no interior roots plus a positive
// sample. Returns a witness description when it fails.
bool sign_definite(const UniPoly& p, const Rational& a, const Rational& b, int want_sign,
                   std::string& witness) {
    if (p.is_zero()) {
        witness = "identically zero";
        return false;
    }
    Rational mid = (a + b) * Rational(1, 2);
    UniPoly q = p;
    int n = q.is_constant() ? 0 : sturm_count(q, a, b);
    if (n > 0) {
        auto roots = isolate_roots(q, a, b);
        auto iv = refine_root(squarefree_part(q.deflate(a, q.root_multiplicity(a))
                                                   .deflate(b, q.root_multiplicity(b))),
                              roots.front(), Rational(1, 1 << 20));
        witness = "zero inside the interval near x = " +
                  std::to_string(((iv.lo + iv.hi) * Rational(1, 2)).to_double());
        return false;
    }
    int s = p.eval(mid).sign();
    if (s != want_sign) {
        witness = "wrong sign at x = " + mid.str();
        return false;
    }
    return true;
}

} // namespace

H1Report verify_h1(const RefractedSystem& sys) {
    H1Report rep;
    auto add = [&](const std::string& name, bool ok, const std::string& wit) {
        rep.conditions.push_back({name, ok, ok ? "" : wit});
        rep.pass = rep.pass && ok;
    };

    add("psi1(0) = 0", sys.psi1.eval(Rational(0)).is_zero(), "psi1(0) != 0");
    add("psi2(0) = 0", sys.psi2.eval(Rational(0)).is_zero(), "psi2(0) != 0");

    Rational c10 = sys.chi1.eval(Rational(0)), c20 = sys.chi2.eval(Rational(0));
    add("chi1(0) = chi2(0) (refraction condition at x = 0)", c10 == c20,
        "chi1(0) = " + c10.str() + ", chi2(0) = " + c20.str());
    add("chi1(0) > 0", c10.sign() > 0, "chi(0) = " + c10.str());

    std::string w;
    bool ok = sign_definite(sys.psi1.derivative(), Rational(0), sys.x_right, +1, w);
    add("x*psi1'(x) > 0 on (0, x_r)", ok, w);
    ok = sign_definite(sys.chi1, Rational(0), sys.x_right, +1, w);
    add("chi1(x) > 0 on (0, x_r)", ok, w);
    ok = sign_definite(sys.psi2.derivative(), sys.x_left, Rational(0), -1, w);
    add("x*psi2'(x) > 0 on (x_l, 0)", ok, w);
    ok = sign_definite(sys.chi2, sys.x_left, Rational(0), +1, w);
    add("chi2(x) > 0 on (x_l, 0)", ok, w);
    return rep;
}

void require_h1(const RefractedSystem& sys) {
    H1Report rep = verify_h1(sys);
    if (rep.pass)
        return;
    for (const auto& c : rep.conditions)
        if (!c.pass)
            throw H1Violation(c.name + ": " + c.witness);
}

AnnulusRange annulus_range(const RefractedSystem& sys) {
    return {Rational(0), sys.h0, sys.h0_exact};
}

namespace {

// sigma(x) = a*x exactly when psi2(a x) == psi1(x) as polynomials.
std::optional<Rational> detect_linear_sigma(const UniPoly& psi1, const UniPoly& psi2) {
    int k0 = psi1.ord0();
    if (k0 < 0 || psi2.ord0() != k0)
        return std::nullopt;
    Rational ratio = psi1.coeff(k0) / psi2.coeff(k0);
    Rational a;
    if (!exact_root(ratio, k0, a))
        return std::nullopt;
    // the involution branch maps (0, x_r) into z < 0
    for (Rational cand : {-a.abs(), a}) {
        if (cand.sign() >= 0)
            continue;
        bool match = true;
        int deg = std::max(psi1.degree(), psi2.degree());
        for (int i = 0; i <= deg && match; ++i)
            match = psi2.coeff(i) * cand.pow(i) == psi1.coeff(i);
        if (match)
            return cand;
    }
    return std::nullopt;
}

} // namespace

InvolutionCurve build_curve(const RefractedSystem& sys) {
    InvolutionCurve curve;
    BiPoly diff = BiPoly::from_unipoly(sys.psi1) -
                  BiPoly::from_unipoly(sys.psi2.retag(Var::z), Var::x, Var::z);
    auto [content, prim] = diff.primitive_parts();
    // keep the positive multiple of psi1 - psi2
    if (content.sign() < 0) {
        prim = -prim;
        content = -content;
    }
    curve.q = prim;
    curve.clear_scale = content; // psi1(x) - psi2(z) = clear_scale * q(x,z)
    curve.psi1 = sys.psi1;
    curve.psi2_z = sys.psi2.retag(Var::z);
    curve.psi1_prime = sys.psi1.derivative();
    curve.psi2_prime_z = sys.psi2.derivative().retag(Var::z);
    curve.x_right = sys.x_right;
    curve.z_left = sys.x_left;
    curve.sigma_slope = detect_linear_sigma(sys.psi1, sys.psi2);

    if (!curve.q.eval(Rational(0), Rational(0)).is_zero())
        throw DomainError("curve does not pass through the origin");
    // psi2' may not vanish inside the z window (guaranteed by the sign
    // hypotheses, but certified here once and for all)
    if (!curve.psi2_prime_z.is_constant() &&
        sturm_count(curve.psi2_prime_z, curve.z_left, Rational(0)) != 0)
        throw DomainError("psi2' vanishes inside the z window");
    return curve;
}

double endpoint_a(const RefractedSystem& sys, double h) {
    return std::sqrt(h / sys.chi1.eval_double(0.0));
}

namespace {

double bisect_monotone(const std::vector<double>& poly, double target, double lo, double hi,
                       double tol) {
    auto ev = [&](double t) {
        double acc = 0;
        for (size_t i = poly.size(); i-- > 0;)
            acc = acc * t + poly[i];
        return acc;
    };
    double flo = ev(lo) - target, fhi = ev(hi) - target;
    if (flo == 0)
        return lo;
    if (fhi == 0)
        return hi;
    if ((flo < 0) == (fhi < 0))
        throw DomainError("bisection bracket does not straddle the level");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = ev(mid) - target;
        if (fm == 0 || hi - lo < tol)
            return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double sigma_eval(const RefractedSystem& sys, double x, double tol) {
    double xl = sys.x_left.to_double(), xr = sys.x_right.to_double();
    if (!(x > xl && x < xr) || x == 0.0)
        throw DomainError("sigma_eval: x outside the punctured domain");
    if (x > 0) {
        double target = sys.psi1.eval_double(x);
        return bisect_monotone(sys.psi2.coeffs_double(), target, xl, 0.0, tol * 1e-4);
    }
    double target = sys.psi2.eval_double(x);
    return bisect_monotone(sys.psi1.coeffs_double(), target, 0.0, xr, tol * 1e-4);
}

double turning_point(const RefractedSystem& sys, Side side, double h, double tol) {
    if (!(h > 0.0) || !(h < sys.h0.to_double()))
        throw DomainError("turning_point: h outside (0, h0)");
    if (side == Side::plus)
        return bisect_monotone(sys.psi1.coeffs_double(), h, 0.0, sys.x_right.to_double(), tol);
    return bisect_monotone(sys.psi2.coeffs_double(), h, sys.x_left.to_double(), 0.0, tol);
}

double branch_y(const RefractedSystem& sys, Side side, double h, double x) {
    double rad = (h - sys.psi(side).eval_double(x)) / sys.chi(side).eval_double(x);
    if (rad < -1e-9 * std::max(1.0, std::abs(h)))
        throw DomainError("branch_y: negative radicand");
    return std::sqrt(std::max(rad, 0.0));
}

double balance(const UniPoly& k1, const UniPoly& k2, const RefractedSystem& sys, double x,
               double tol) {
    double z = sigma_eval(sys, x, tol);
    double kx = x > 0 ? k1.eval_double(x) : k2.eval_double(x);
    double kz = z > 0 ? k1.eval_double(z) : k2.eval_double(z);
    return 0.5 * (kx - kz);
}

} // namespace refract
