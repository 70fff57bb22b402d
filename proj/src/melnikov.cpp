#include "refract/melnikov.hpp"

#include <algorithm>
#include <cmath>

#include "refract/quadrature.hpp"

namespace refract {

PolyPerturbation PolyPerturbation::zero(int n) {
    PolyPerturbation p;
    p.n = n;
    auto blank = std::vector<std::vector<Rational>>(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    p.a_plus = p.b_plus = p.a_minus = p.b_minus = blank;
    return p;
}

PolyPerturbation PolyPerturbation::from_y_poly(const std::vector<Rational>& plus,
                                               const std::vector<Rational>& minus) {
    int deg = std::max<int>(static_cast<int>(plus.size()), static_cast<int>(minus.size())) - 1;
    if (deg < 0)
        deg = 0;
    PolyPerturbation p = zero(deg + 1);
    for (size_t i = 0; i < plus.size(); ++i)
        p.b(Side::plus, static_cast<int>(i), 1) = plus[i];
    for (size_t i = 0; i < minus.size(); ++i)
        p.b(Side::minus, static_cast<int>(i), 1) = minus[i];
    return p;
}

const Rational& PolyPerturbation::a(Side s, int i, int j) const {
    return (s == Side::plus ? a_plus : a_minus).at(i).at(j);
}
const Rational& PolyPerturbation::b(Side s, int i, int j) const {
    return (s == Side::plus ? b_plus : b_minus).at(i).at(j);
}
Rational& PolyPerturbation::a(Side s, int i, int j) {
    return (s == Side::plus ? a_plus : a_minus).at(i).at(j);
}
Rational& PolyPerturbation::b(Side s, int i, int j) {
    return (s == Side::plus ? b_plus : b_minus).at(i).at(j);
}

RatFunc Generator::f_x() const {
    if (!h_free())
        throw DomainError("integrand depends on h");
    auto cs = f_num.coeffs_in_v2();
    return RatFunc(cs.empty() ? UniPoly(Var::x) : cs[0], f_den);
}

Generator Generator::monomial(Side side, int i) {
    Generator g;
    g.side = side;
    g.power = i;
    g.name = (side == Side::plus ? "I" : "J") + std::to_string(i);
    g.f_num = BiPoly::monomial(i, 0, Rational(1), Var::x, Var::h);
    g.s = 1;
    return g;
}

Generator Generator::from_ratfunc(Side side, const RatFunc& f, int s, std::string name) {
    Generator g;
    g.side = side;
    g.power = -1;
    g.name = std::move(name);
    g.f_num = BiPoly::from_unipoly(f.num().retag(Var::x), Var::x, Var::h);
    g.f_den = f.den().retag(Var::x);
    g.s = s;
    return g;
}

MelnikovFamily reduce_perturbation(const PolyPerturbation& pert, const RefractedSystem& sys) {
    MelnikovFamily fam;
    const int n = pert.n;
    auto predicted = structure_degrees(n, std::max(sys.psi1.degree(), 2),
                                       std::max(sys.psi2.degree(), 2));

    for (Side side : {Side::plus, Side::minus}) {
        const UniPoly& psi = sys.psi(side);
        const UniPoly& chi = sys.chi(side);
        for (int i = 0; i <= n; ++i) {
            // pure-x dx terms close up to zero around the loop
            if (!pert.b(side, i, 0).is_zero())
                fam.dropped_even.push_back((side == Side::plus ? "+x^" : "-x^") +
                                           std::to_string(i) + "y^0");
        }
        for (int j = 1; j <= n; ++j) {
            for (int i = 0; i + j <= n; ++i) {
                // combined dx-coefficient of x^i y^j from the closed-loop
                // rewrite of the dy terms
                Rational c = pert.b(side, i, j);
                if (i + 1 + (j - 1) <= n)
                    c += Rational(i + 1, j) * pert.a(side, i + 1, j - 1);
                if (c.is_zero())
                    continue;
                std::string mono = "x^" + std::to_string(i) + "y^" + std::to_string(j);
                if (j % 2 == 0) {
                    fam.dropped_even.push_back((side == Side::plus ? "+" : "-") + mono);
                    continue; // closed-loop integral of an even power vanishes
                }
                int l = (j - 1) / 2;
                // x^i y^j dx -> x^i ((h - psi)/chi)^l y dx
                BiPoly lift = BiPoly::monomial(0, 1, Rational(1), Var::x, Var::h) -
                              BiPoly::from_unipoly(psi, Var::x, Var::h);
                BiPoly f = BiPoly::monomial(i, 0, Rational(1), Var::x, Var::h);
                for (int t = 0; t < l; ++t)
                    f = f * lift;
                UniPoly den = chi.pow(l);
                Generator g;
                g.side = side;
                g.s = 1;
                g.f_num = f;
                g.f_den = den;
                g.power = (l == 0) ? i : -1;
                g.name = (side == Side::plus ? "I" : "J") +
                         (l == 0 ? std::to_string(i)
                                 : "[" + std::to_string(i) + "," + std::to_string(j) + "]");
                fam.gens.push_back(g);
                fam.default_coeffs.push_back(c);
            }
        }
    }

    // canonical order: right-side monomials by power, then left side
    std::vector<size_t> idx(fam.gens.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t u, size_t v) {
        const auto& a = fam.gens[u];
        const auto& b = fam.gens[v];
        if (a.side != b.side)
            return a.side == Side::plus;
        return a.f_num.degree1() < b.f_num.degree1();
    });
    MelnikovFamily sorted;
    sorted.h_power = 0;
    sorted.dropped_even = fam.dropped_even;
    for (size_t i : idx) {
        sorted.gens.push_back(fam.gens[i]);
        sorted.default_coeffs.push_back(fam.default_coeffs[i]);
    }
    sorted.structure_supported = true;
    for (const auto& g : sorted.gens) {
        sorted.structure_supported = sorted.structure_supported && g.h_free();
        int cap = g.side == Side::plus ? predicted.first : predicted.second;
        if (g.f_num.degree1() > cap)
            throw Error("reduced integrand exceeds the structural degree bound");
    }
    return sorted;
}

std::pair<int, int> structure_degrees(int n, int m1, int m2) {
    if (n % 2 == 1)
        return {m1 * (n - 1) / 2, m2 * (n - 1) / 2};
    return {m1 * (n - 2) / 2 + 1, m2 * (n - 2) / 2 + 1};
}

double arc_integral(const RefractedSystem& sys, Side side, double h,
                    const std::function<double(double)>& g, int ypow, double tol) {
    if (ypow < -1 || ypow % 2 == 0)
        throw OrderError("y-power must be odd and at least -1");
    double xh = turning_point(sys, side, h, 1e-13);
    auto chi = sys.chi(side).coeffs_double();
    auto psi = sys.psi(side).coeffs_double();
    auto dpsi = sys.psi(side).derivative().coeffs_double();
    auto horner = [](const std::vector<double>& p, double t) {
        double acc = 0;
        for (size_t i = p.size(); i-- > 0;)
            acc = acc * t + p[i];
        return acc;
    };
    // polish the turning point so the radicand vanishes exactly there
    for (int it = 0; it < 3; ++it) {
        double d = horner(dpsi, xh);
        if (d != 0.0)
            xh -= (horner(psi, xh) - h) / d;
    }
    // Taylor shift of psi at xh: psi(xh) - psi(xh - dx) evaluated in dx is
    // free of the cancellation that a direct difference suffers near the
    // turning point (and the inverse-power integrands amplify)
    std::vector<double> shifted = psi; // becomes psi(xh + t) coefficients
    for (size_t k = 0; k + 1 < shifted.size(); ++k)
        for (size_t j = shifted.size() - 1; j > k; --j)
            shifted[j - 1] += shifted[j] * xh;
    std::vector<double> diff_coeffs; // psi(xh) - psi(xh - dx) = sum c_k dx^k
    for (size_t k = 1; k < shifted.size(); ++k)
        diff_coeffs.push_back((k % 2 == 1 ? 1.0 : -1.0) * shifted[k]);
    auto integrand = [&](double u) {
        u = std::min(u, 1.0 - 1e-16);
        double dx = xh * u * u;
        double x = xh - dx;
        double num = 0;
        for (size_t i = diff_coeffs.size(); i-- > 0;)
            num = num * dx + diff_coeffs[i];
        num *= dx;
        double rad = num / horner(chi, x);
        double y;
        if (ypow >= 1) {
            y = std::pow(std::max(rad, 0.0), 0.5 * ypow);
        } else {
            // ypow == -1: u / sqrt(rad) stays bounded; guard the last bits
            if (rad <= 0)
                return 0.0;
            y = 1.0 / std::sqrt(rad);
        }
        return g(x) * y * 2.0 * xh * u;
    };
    return tanh_sinh(integrand, 0.0, 1.0, tol);
}

namespace {

std::function<double(double)> integrand_at_h(const Generator& gen, double h) {
    // collapse f(x, h) to a polynomial in x at this h, in double precision
    auto cs = gen.f_num.coeffs_in_v2();
    double hpow = 1.0;
    std::vector<std::vector<double>> rows;
    for (const auto& c : cs)
        rows.push_back(c.coeffs_double());
    size_t width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.size());
    std::vector<double> folded(width, 0.0);
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i)
            folded[i] += r[i] * hpow;
        hpow *= h;
    }
    std::vector<double> den = gen.f_den.coeffs_double();
    return [folded = std::move(folded), den = std::move(den)](double x) {
        double np = 0;
        for (size_t i = folded.size(); i-- > 0;)
            np = np * x + folded[i];
        double dp = 0;
        for (size_t i = den.size(); i-- > 0;)
            dp = dp * x + den[i];
        return np / dp;
    };
}

} // namespace

double generator_value(const Generator& gen, const RefractedSystem& sys, double h, double tol) {
    double arc = arc_integral(sys, gen.side, h, integrand_at_h(gen, h), 2 * gen.s - 1, tol / 2);
    return gen.side == Side::plus ? 2.0 * arc : -2.0 * arc;
}

double melnikov_eval(const MelnikovFamily& family, std::span<const double> coeffs,
                     const RefractedSystem& sys, double h, double tol) {
    if (!(h > 0.0) || !(h < sys.h0.to_double()))
        throw DomainError("melnikov_eval: h outside (0, h0)");
    if (coeffs.size() != family.gens.size())
        throw DomainError("coefficient count does not match the family");
    double scale = std::pow(h, -family.h_power);
    double cmax = 1.0;
    for (double c : coeffs)
        cmax = std::max(cmax, std::abs(c));
    double per = tol / (scale * cmax * std::max<size_t>(family.gens.size(), 1));
    double acc = 0.0;
    for (size_t k = 0; k < family.gens.size(); ++k) {
        if (coeffs[k] == 0.0)
            continue;
        acc += coeffs[k] * generator_value(family.gens[k], sys, h, per);
    }
    return scale * acc;
}

Rational derivative_constant(int s, int k) {
    Rational c(2);
    for (int i = 0; i < k; ++i)
        c *= Rational(2 * (s - i) - 1, 2);
    return c;
}

double melnikov_derivative_eval(const Generator& gen, const RefractedSystem& sys, double h,
                                int k, double tol) {
    if (k < 0 || k > gen.s)
        throw OrderError("derivative order must satisfy 0 <= k <= s");
    if (!gen.h_free())
        throw DomainError("closed derivative formula needs an h-free integrand");
    double ck = derivative_constant(gen.s, k).to_double();
    double arc =
        arc_integral(sys, gen.side, h, integrand_at_h(gen, h), 2 * (gen.s - k) - 1, tol / 2);
    return gen.side == Side::plus ? ck * arc : -ck * arc;
}

double l_value(const Generator& gen, const RefractedSystem& sys, double x, double tol) {
    auto g = integrand_at_h(gen, 0.0); // h-free integrands only
    if (!gen.h_free())
        throw DomainError("sigma-substituted integrand needs an h-free generator");
    if (gen.side == Side::plus)
        return g(x);
    double z = sigma_eval(sys, x, tol);
    double sp = sys.psi1.derivative().eval_double(x) / sys.psi2.derivative().eval_double(z);
    return -g(z) * sp;
}

namespace {

int count_with_values(const std::vector<double>& hs, const std::vector<double>& vals,
                      const std::function<double(double)>& eval, double noise) {
    int count = 0;
    for (size_t i = 0; i + 1 < hs.size(); ++i) {
        double v0 = vals[i], v1 = vals[i + 1];
        if (std::abs(v0) <= noise || std::abs(v1) <= noise)
            continue;
        if ((v0 < 0) == (v1 < 0))
            continue;
        // one bisection step: keep the half where the change persists
        double hm = 0.5 * (hs[i] + hs[i + 1]);
        double vm = eval(hm);
        if (std::abs(vm) <= noise) {
            ++count; // crossing straight through the noise band
            continue;
        }
        if ((vm < 0) != (v0 < 0) || (vm < 0) != (v1 < 0))
            ++count;
    }
    return count;
}

} // namespace

int count_sign_changes(const MelnikovFamily& family, std::span<const double> coeffs,
                       const RefractedSystem& sys, int grid, double tol) {
    if (grid < 16)
        throw DomainError("grid must have at least 16 points");
    double h0 = sys.h0.to_double();
    double delta = h0 / grid;
    std::vector<double> hs(grid), vals(grid);
    for (int i = 0; i < grid; ++i) {
        hs[i] = delta + (h0 - 2 * delta) * i / (grid - 1);
        vals[i] = melnikov_eval(family, coeffs, sys, hs[i], tol);
    }
    return count_with_values(hs, vals, [&](double h) {
        return melnikov_eval(family, coeffs, sys, h, tol);
    }, 10 * tol);
}

GeneratorGrid tabulate_generators(const MelnikovFamily& family, const RefractedSystem& sys,
                                  int grid, double tol) {
    GeneratorGrid tab;
    tab.h_power = family.h_power;
    double h0 = sys.h0.to_double();
    double delta = h0 / grid;
    tab.hs.resize(grid);
    for (int i = 0; i < grid; ++i)
        tab.hs[i] = delta + (h0 - 2 * delta) * i / (grid - 1);
    tab.values.assign(family.gens.size(), std::vector<double>(grid));
    for (size_t g = 0; g < family.gens.size(); ++g)
        for (int i = 0; i < grid; ++i)
            tab.values[g][i] = generator_value(family.gens[g], sys, tab.hs[i], tol);
    return tab;
}

int count_sign_changes_on_grid(const GeneratorGrid& tab, const MelnikovFamily& family,
                               std::span<const double> coeffs, const RefractedSystem& sys,
                               double tol) {
    const size_t G = tab.values.size();
    std::vector<double> vals(tab.hs.size());
    for (size_t i = 0; i < tab.hs.size(); ++i) {
        double acc = 0;
        for (size_t g = 0; g < G; ++g)
            acc += coeffs[g] * tab.values[g][i];
        vals[i] = acc * std::pow(tab.hs[i], -tab.h_power);
    }
    return count_with_values(tab.hs, vals, [&](double h) {
        return melnikov_eval(family, coeffs, sys, h, tol);
    }, 10 * tol);
}

WronskianPair wronskian_numeric(const MelnikovFamily& family, const RefractedSystem& sys,
                                double h, int k, double tol) {
    if (k < 1 || k > 2)
        throw OrderError("wronskian_numeric supports k in {1, 2}");
    if (family.gens.size() < static_cast<size_t>(k))
        throw DomainError("family has fewer generators than k");

    WronskianPair out{};
    // route (a): determinant of derivative values
    if (k == 1) {
        out.determinant_route = melnikov_derivative_eval(family.gens[0], sys, h, 0, tol);
    } else {
        double m00 = melnikov_derivative_eval(family.gens[0], sys, h, 0, tol);
        double m01 = melnikov_derivative_eval(family.gens[1], sys, h, 0, tol);
        double m10 = melnikov_derivative_eval(family.gens[0], sys, h, 1, tol);
        double m11 = melnikov_derivative_eval(family.gens[1], sys, h, 1, tol);
        out.determinant_route = m00 * m11 - m01 * m10;
    }

    // route (b): iterated integral of the discrete Wronskian, which expands
    // into products of one-dimensional integrals of the l-functions
    auto l_int = [&](size_t j, int order) {
        return arc_integral(
            sys, Side::plus, h, [&](double x) { return l_value(family.gens[j], sys, x); },
            2 * (family.gens[j].s - order) - 1, tol);
    };
    int s = family.gens[0].s;
    if (k == 1) {
        out.integral_route = derivative_constant(s, 0).to_double() * l_int(0, 0);
    } else {
        double m = (derivative_constant(s, 0) * derivative_constant(s, 1)).to_double();
        out.integral_route = m * (l_int(0, 0) * l_int(1, 1) - l_int(1, 0) * l_int(0, 1));
    }
    return out;
}

} // namespace refract
