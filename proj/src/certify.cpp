#include "refract/certify.hpp"

#include <algorithm>
#include <random>

namespace refract {

const char* cert_path_name(CertPath p) {
    return p == CertPath::interleaved ? "interleaved" : "one_sided";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::certified: return "certified";
        case Verdict::not_certified: return "not_certified";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// condition polynomial contributed by one generator: the combination
// sum c_j B_j vanishes on the curve iff the family is dependent
BiPoly condition_poly(const Generator& gen, const InvolutionCurve& curve) {
    RatFunc f = gen.f_x();
    if (!f.is_polynomial())
        throw ExactPathUnsupported("independence needs polynomial integrands");
    UniPoly num = f.num() * f.den().lead().inv();
    if (gen.side == Side::plus)
        return BiPoly::from_unipoly(num.retag(Var::x)) *
               BiPoly::from_unipoly(curve.psi2_prime_z, Var::x, Var::z);
    return -(BiPoly::from_unipoly(num.retag(Var::z), Var::x, Var::z) *
             BiPoly::from_unipoly(curve.psi1_prime));
}

// exact kernel and greedy maximal independent subset of the columns
struct ColumnSpan {
    // rows of reduced columns paired with the combination that produced them
    std::vector<std::vector<Rational>> basis;      // echelon rows over monomials
    std::vector<std::vector<Rational>> expression; // same rows, in kept-column coordinates
    std::vector<int> pivot;                        // pivot position per basis row
};

} // namespace

IndependenceResult independence_reduce(const MelnikovFamily& family,
                                       const InvolutionCurve& curve) {
    IndependenceResult out;
    const size_t G = family.gens.size();
    if (G == 0)
        return out;
    for (const auto& g : family.gens)
        if (!g.h_free())
            throw ExactPathUnsupported("independence needs h-free integrands");

    // each generator's condition polynomial, reduced onto a common monomial list
    std::vector<BiPoly> cond;
    cond.reserve(G);
    for (const auto& g : family.gens) {
        BiPoly b = condition_poly(g, curve);
        if (curve.sigma_slope) {
            // exact branch z = a x: reduce through substitution
            UniPoly u = b.substitute_v2_linear(*curve.sigma_slope);
            cond.push_back(BiPoly::from_unipoly(u));
        } else if (b.degree2() >= curve.q.degree2()) {
            cond.push_back(b.divmod_in_v2(curve.q).second);
        } else {
            cond.push_back(b);
        }
    }

    // monomial support
    std::vector<BiPoly::Key> monomials;
    for (const auto& b : cond)
        for (const auto& [k, c] : b.terms())
            if (std::find(monomials.begin(), monomials.end(), k) == monomials.end())
                monomials.push_back(k);
    std::sort(monomials.begin(), monomials.end());

    // columns in monomial coordinates
    std::vector<std::vector<Rational>> col(G, std::vector<Rational>(monomials.size(), Rational(0)));
    for (size_t j = 0; j < G; ++j)
        for (size_t r = 0; r < monomials.size(); ++r)
            col[j][r] = cond[j].coeff(monomials[r].first, monomials[r].second);

    // greedy elimination: keep a column iff it leaves the span of the kept ones
    std::vector<std::vector<Rational>> basis;      // echelon rows
    std::vector<std::vector<Rational>> expr;       // combination of kept columns per row
    std::vector<int> pivots;
    auto reduce_against = [&](std::vector<Rational>& v, std::vector<Rational>& combo) {
        for (size_t b = 0; b < basis.size(); ++b) {
            int p = pivots[b];
            if (v[p].is_zero())
                continue;
            Rational f = v[p] / basis[b][p];
            for (size_t r = 0; r < v.size(); ++r)
                v[r] -= f * basis[b][r];
            for (size_t c = 0; c < combo.size(); ++c)
                combo[c] -= f * expr[b][c];
        }
    };
    for (size_t j = 0; j < G; ++j) {
        std::vector<Rational> v = col[j];
        std::vector<Rational> combo(G, Rational(0));
        combo[j] = Rational(1);
        reduce_against(v, combo);
        int p = -1;
        for (size_t r = 0; r < v.size(); ++r)
            if (!v[r].is_zero()) {
                p = static_cast<int>(r);
                break;
            }
        if (p >= 0) {
            basis.push_back(v);
            expr.push_back(combo);
            pivots.push_back(p);
            out.kept.push_back(static_cast<int>(j));
        } else {
            // dependent: combo is a kernel vector; normalize it to a primitive
            // integer vector with positive first nonzero entry
            Rational content(0);
            for (const auto& c : combo)
                content = rat_gcd(content, c);
            int sign = 0;
            for (const auto& c : combo)
                if (!c.is_zero()) {
                    sign = c.sign();
                    break;
                }
            if (sign < 0)
                content = -content;
            for (auto& c : combo)
                c /= content;
            out.relations.push_back(combo);
        }
    }
    out.rank = static_cast<int>(out.kept.size());
    return out;
}

MelnikovFamily restrict_family(const MelnikovFamily& family, const std::vector<int>& kept) {
    MelnikovFamily out;
    out.h_power = family.h_power;
    out.structure_supported = family.structure_supported;
    out.dropped_even = family.dropped_even;
    for (int j : kept) {
        out.gens.push_back(family.gens[j]);
        out.default_coeffs.push_back(family.default_coeffs[j]);
    }
    return out;
}

RatFunc promote_power(const RatFunc& F, int k, Side side, const RefractedSystem& sys) {
    if (k < 3 || k % 2 == 0)
        throw OrderError("promotion target power must be odd and at least 3");
    RatFunc chi(sys.chi(side));
    RatFunc dpsi(sys.psi(side).derivative());
    RatFunc ratio = chi * F / dpsi;
    if (ratio.den().eval(Rational(0)).is_zero() || ratio.ord0() < 0)
        throw NotPromotable("chi F / psi' is not analytic at the corner");
    RatFunc g = ratio.derivative() * Rational(2, k);
    RatFunc chip(sys.chi(side).derivative());
    if (!chip.is_zero())
        g = g - chip * F / dpsi;
    return g;
}

MelnikovFamily raise_s(const MelnikovFamily& family, int member_count,
                       const RefractedSystem& sys, PromotionTrace* trace) {
    MelnikovFamily out = family;
    PromotionTrace local;
    local.s_initial = family.gens.empty() ? 1 : family.gens.front().s;
    local.s_final = local.s_initial;
    for (auto& g : out.gens)
        if (g.s != local.s_initial)
            throw DomainError("mixed powers in one family");

    int s = local.s_initial;
    while (s <= member_count - 2) {
        // energy identity followed by one promotion with target power 2s+1
        int k = 2 * s + 1;
        PromotionRound round{k, {}};
        for (auto& gen : out.gens) {
            RatFunc f = gen.f_x();
            RatFunc chi(sys.chi(gen.side));
            RatFunc psi(sys.psi(gen.side));
            RatFunc g = promote_power(f * psi, k, gen.side, sys);
            round.g.push_back(g);
            RatFunc fnew = chi * f + g;
            gen = Generator::from_ratfunc(gen.side, fnew, s + 1, gen.name);
        }
        out.h_power += 1;
        local.h_power_added += 1;
        local.rounds.push_back(std::move(round));
        ++s;
        local.s_final = s;
    }
    if (trace)
        *trace = local;
    return out;
}

LFunctionSet build_l(const MelnikovFamily& reduced, const InvolutionCurve& curve,
                     const RefractedSystem& sys) {
    if (sys.chi1.degree() > 0 || sys.chi2.degree() > 0)
        throw ExactPathUnsupported("exact certification is limited to constant chi");
    LFunctionSet lset;
    lset.x_right = curve.x_right;
    if (reduced.gens.empty())
        throw DomainError("empty family");
    lset.s = reduced.gens.front().s;
    // common positive factor chi^(1/2) dropped; the rational part is kept
    Rational chi0 = sys.chi1.eval(Rational(0));
    Rational scale = chi0.pow(-(lset.s - 1));

    std::vector<const Generator*> plus, minus;
    for (const auto& g : reduced.gens)
        (g.side == Side::plus ? plus : minus).push_back(&g);

    bool one_sided = minus.empty() && curve.sigma_slope.has_value();
    if (one_sided) {
        lset.path = CertPath::one_sided;
        lset.sigma_slope = *curve.sigma_slope;
        for (const auto* g : plus) {
            lset.l.push_back(CurveRat::from_x_ratfunc(g->f_x() * scale));
            lset.source.push_back(g->name);
        }
        return lset;
    }

    lset.path = CertPath::interleaved;
    lset.extended = plus.size() != minus.size();
    BiPoly p1 = BiPoly::from_unipoly(curve.psi1_prime);
    BiPoly p2 = BiPoly::from_unipoly(curve.psi2_prime_z, Var::x, Var::z);
    for (size_t t = 0; t < std::max(plus.size(), minus.size()); ++t) {
        if (t < plus.size()) {
            lset.l.push_back(CurveRat::from_x_ratfunc(plus[t]->f_x() * scale));
            lset.source.push_back(plus[t]->name);
        }
        if (t < minus.size()) {
            RatFunc f = minus[t]->f_x() * scale;
            BiPoly num = -(BiPoly::from_unipoly(f.num().retag(Var::z), Var::x, Var::z) * p1);
            BiPoly den = BiPoly::from_unipoly(f.den().retag(Var::z), Var::x, Var::z) * p2;
            lset.l.push_back(CurveRat(num, den));
            lset.source.push_back(minus[t]->name);
        }
    }
    return lset;
}

namespace {

CurveRat curve_det(const std::vector<std::vector<CurveRat>>& m, std::vector<int> cols) {
    if (cols.size() == 1)
        return m[m.size() - cols.size()][cols[0]];
    size_t row = m.size() - cols.size();
    CurveRat acc;
    for (size_t i = 0; i < cols.size(); ++i) {
        std::vector<int> rest;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != i)
                rest.push_back(cols[j]);
        CurveRat minor = curve_det(m, rest);
        CurveRat term = m[row][cols[i]] * minor;
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// denominator split u(x) * v(z); returns false when the split fails
bool split_denominator(const BiPoly& den, UniPoly& u, UniPoly& v) {
    u = den.content_v1();
    BiPoly rest = den.divide_content_v1(u);
    if (rest.degree1() > 0)
        return false;
    auto rows = rest.coeffs_in_v2();
    std::vector<Rational> vc(rows.size());
    for (size_t j = 0; j < rows.size(); ++j)
        vc[j] = rows[j].is_zero() ? Rational(0) : rows[j].coeff(0);
    v = UniPoly(Var::z, vc);
    return true;
}

} // namespace

CertificationReport certify_ect(const LFunctionSet& lset, const InvolutionCurve& curve) {
    CertificationReport rep;
    rep.path = lset.path;
    rep.extended = lset.extended;
    const int N = static_cast<int>(lset.l.size());
    rep.members = N;
    rep.max_zeros = N - 1;

    // derivative rows once, leading principal minors per order
    std::vector<std::vector<CurveRat>> rows;
    rows.push_back(lset.l);
    for (int i = 1; i < N; ++i) {
        std::vector<CurveRat> next;
        next.reserve(N);
        for (const auto& f : rows.back())
            next.push_back(derive_along_curve(f, curve));
        rows.push_back(std::move(next));
    }

    bool all_nonzero = true, any_inconclusive = false;
    for (int k = 1; k <= N; ++k) {
        OrderRecord rec;
        rec.k = k;
        std::vector<std::vector<CurveRat>> sub(rows.begin(), rows.begin() + k);
        std::vector<int> cols(k);
        for (int j = 0; j < k; ++j)
            cols[j] = j;
        CurveRat w = curve_det(sub, cols);
        auto norm = w.normalized();
        rec.w_prefactor = norm.prefactor;
        rec.w_num = norm.num;
        rec.w_den = norm.den;

        if (w.is_zero()) {
            rec.den_certified = true;
            rec.cert.status = CertStatus::ZERO_FOUND;
            rec.cert.note = "wronskian vanishes identically";
            all_nonzero = false;
            rep.reasons.push_back("W[" + std::to_string(k) + "] is identically zero");
            rep.orders.push_back(std::move(rec));
            continue;
        }

        UniPoly u(Var::x), v(Var::z);
        if (!split_denominator(rec.w_den, u, v)) {
            rec.den_certified = false;
            rec.den_note = "denominator is not a product of one-variable factors";
            any_inconclusive = true;
            rep.reasons.push_back("W[" + std::to_string(k) + "]: " + rec.den_note);
            rep.orders.push_back(std::move(rec));
            continue;
        }
        bool u_ok = u.is_constant() || sturm_count(u, Rational(0), curve.x_right) == 0;
        bool v_ok = v.is_constant() || sturm_count(v, curve.z_left, Rational(0)) == 0;
        rec.den_certified = u_ok && v_ok;
        if (!rec.den_certified) {
            rec.den_note = "denominator vanishes inside the window";
            any_inconclusive = true;
            rep.reasons.push_back("W[" + std::to_string(k) + "]: " + rec.den_note);
            rep.orders.push_back(std::move(rec));
            continue;
        }
        if (v.degree() > 0)
            rec.den_note = "z-power denominators stay away from zero inside the annulus; "
                           "the boundary behavior is carried by the stripped x factors";

        rec.cert = nonvanishing_on_curve(w, curve);
        if (rec.cert.status == CertStatus::INCONCLUSIVE) {
            any_inconclusive = true;
            rep.reasons.push_back("W[" + std::to_string(k) + "]: " + rec.cert.note);
        } else if (rec.cert.status == CertStatus::ZERO_FOUND) {
            all_nonzero = false;
            rep.reasons.push_back("W[" + std::to_string(k) + "] vanishes inside the window");
        }
        rep.orders.push_back(std::move(rec));
    }

    if (all_nonzero && !any_inconclusive) {
        rep.verdict = Verdict::certified;
        rep.max_limit_cycles = rep.max_zeros;
    } else if (!all_nonzero) {
        rep.verdict = Verdict::not_certified;
    } else {
        rep.verdict = Verdict::inconclusive;
    }
    return rep;
}

DiscreteCheckReport discrete_wronskian_check(const LFunctionSet& lset,
                                             const RefractedSystem& sys, int samples,
                                             unsigned long seed) {
    DiscreteCheckReport rep;
    const int N = static_cast<int>(lset.l.size());
    if (samples < N)
        throw DomainError("need at least as many samples as family members");
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    double xr = lset.x_right.to_double();
    std::uniform_real_distribution<double> dist(xr * 1e-3, xr * (1 - 1e-3));

    auto lval = [&](int j, double x) {
        double z = sigma_eval(sys, x, 1e-13);
        return lset.l[j].eval_double(x, z);
    };
    for (int k = 1; k <= N; ++k) {
        int sign = 0;
        for (int t = 0; t < samples; ++t) {
            std::vector<double> xs(k);
            for (auto& x : xs)
                x = dist(rng);
            std::sort(xs.begin(), xs.end());
            bool distinct = true;
            for (int i = 0; i + 1 < k; ++i)
                distinct = distinct && xs[i + 1] - xs[i] > 1e-9;
            if (!distinct)
                continue;
            // discrete Wronskian: rows are sample points, columns members
            std::vector<std::vector<double>> m(k, std::vector<double>(k));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    m[r][c] = lval(c, xs[r]);
            // Gaussian elimination determinant
            double det = 1.0;
            for (int c = 0; c < k; ++c) {
                int piv = c;
                for (int r = c + 1; r < k; ++r)
                    if (std::abs(m[r][c]) > std::abs(m[piv][c]))
                        piv = r;
                if (m[piv][c] == 0.0) {
                    det = 0.0;
                    break;
                }
                if (piv != c) {
                    std::swap(m[piv], m[c]);
                    det = -det;
                }
                det *= m[c][c];
                for (int r = c + 1; r < k; ++r) {
                    double f = m[r][c] / m[c][c];
                    for (int cc = c; cc < k; ++cc)
                        m[r][cc] -= f * m[c][cc];
                }
            }
            if (std::abs(det) <= 1e-9) {
                ++rep.violations;
                continue;
            }
            int s = det > 0 ? 1 : -1;
            if (sign == 0)
                sign = s;
            else if (s != sign)
                ++rep.violations;
        }
    }
    rep.ok = rep.violations == 0;
    return rep;
}

CertifyOutcome run_certification(const PolyPerturbation& pert, const RefractedSystem& sys) {
    CertifyOutcome out;
    require_h1(sys);
    InvolutionCurve curve = build_curve(sys);
    out.family = reduce_perturbation(pert, sys);
    if (!out.family.structure_supported) {
        out.structure_note = "STRUCTURE_UNSUPPORTED";
        out.report.verdict = Verdict::inconclusive;
        out.report.reasons.push_back(
            "integrands depend on the energy after reduction; numeric scan remains available");
        return out;
    }
    if (out.family.gens.empty()) {
        out.structure_note = "EMPTY_FAMILY";
        out.report.verdict = Verdict::inconclusive;
        out.report.reasons.push_back("the perturbation integrates to zero at first order");
        return out;
    }
    out.report.independence = independence_reduce(out.family, curve);
    out.reduced = restrict_family(out.family, out.report.independence.kept);
    const int N = static_cast<int>(out.reduced.gens.size());
    out.promoted = raise_s(out.reduced, N, sys, &out.report.promotion);
    out.lset = build_l(out.promoted, curve, sys);
    auto indep = out.report.independence;
    auto promo = out.report.promotion;
    out.report = certify_ect(out.lset, curve);
    out.report.independence = std::move(indep);
    out.report.promotion = std::move(promo);
    out.certification_ran = true;
    return out;
}

} // namespace refract
