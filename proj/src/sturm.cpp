#include "refract/sturm.hpp"

#include <algorithm>

namespace refract {

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero())
        return chain;
    chain.push_back(d);
    while (true) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = a.divmod(b).second;
        if (r.is_zero())
            break;
        r = -r;
        // positive rescaling keeps the chain property and the coefficients small
        auto [c, prim] = r.primitive_parts();
        chain.push_back(c.sign() > 0 ? prim : -prim);
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& t) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
        int s = q.eval(t).sign();
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

UniPoly deflated(const UniPoly& p, const Rational& a, const Rational& b) {
    UniPoly q = p;
    int ma = q.root_multiplicity(a);
    if (ma)
        q = q.deflate(a, ma);
    int mb = q.root_multiplicity(b);
    if (mb)
        q = q.deflate(b, mb);
    return q;
}

} // namespace

int sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero())
        throw ZeroPolynomial("sturm_count on the zero polynomial");
    if (!(a < b))
        throw DomainError("sturm_count interval must satisfy a < b");
    UniPoly q = deflated(p, a, b);
    if (q.is_constant())
        return 0;
    q = squarefree_part(q);
    auto chain = sturm_chain(q);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero())
        throw ZeroPolynomial("isolate_roots on the zero polynomial");
    UniPoly q = squarefree_part(deflated(p, a, b));
    std::vector<RootInterval> out;
    if (q.is_constant())
        return out;
    auto chain = sturm_chain(q);
    // roots counted on half-open (lo, hi]: endpoints of the original
    // interval carry no roots after deflation
    auto count = [&](const Rational& lo, const Rational& hi) {
        return sign_variations(chain, lo) - sign_variations(chain, hi);
    };
    struct Seg { Rational lo, hi; int n; };
    std::vector<Seg> work{{a, b, count(a, b)}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.n == 0)
            continue;
        if (s.n == 1 && !q.eval(s.hi).is_zero() && q.eval(s.lo).sign() * q.eval(s.hi).sign() < 0) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) * Rational(1, 2);
        if (q.eval(mid).is_zero()) {
            // rational root hit exactly: emit a tight bracket around it
            Rational w = (s.hi - s.lo) * Rational(1, 1024);
            while (!q.eval(mid - w).is_zero() && !q.eval(mid + w).is_zero() &&
                   count(mid - w, mid + w) > 1)
                w = w * Rational(1, 2);
            out.push_back({mid - w, mid + w});
            int nl = count(s.lo, mid - w), nr = count(mid + w, s.hi);
            if (nl)
                work.push_back({s.lo, mid - w, nl});
            if (nr)
                work.push_back({mid + w, s.hi, nr});
            continue;
        }
        int nl = count(s.lo, mid);
        work.push_back({s.lo, mid, nl});
        work.push_back({mid, s.hi, s.n - nl});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& u, const RootInterval& v) { return u.lo < v.lo; });
    return out;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width) {
    int slo = p.eval(iv.lo).sign();
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) * Rational(1, 2);
        int sm = p.eval(mid).sign();
        if (sm == 0) {
            // nudge the bracket; the root is exactly mid
            Rational w = width * Rational(1, 4);
            iv.lo = mid - w;
            iv.hi = mid + w;
            break;
        }
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

SmallestRoot smallest_root_in(const UniPoly& p, const Rational& a, const Rational& b,
                              const Rational& refine_width) {
    SmallestRoot res;
    auto roots = isolate_roots(p, a, b);
    if (roots.empty())
        return res;
    res.found = true;
    UniPoly sf = squarefree_part(deflated(p, a, b));
    RootInterval iv = refine_root(sf, roots.front(), refine_width);

    // rational root theorem on the primitive integer form
    auto [c, prim] = sf.primitive_parts();
    (void)c;
    mpz_class a0 = prim.coeff(prim.ord0()).num();
    mpz_class an = prim.lead().num();
    auto divisors = [](mpz_class v, size_t cap) {
        std::vector<mpz_class> ds;
        v = ::abs(v);
        if (v > mpz_class(1000000000000L))
            return ds; // trial division too costly; fall back to the interval
        for (mpz_class d = 1; d * d <= v; ++d) {
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
                if (ds.size() > cap)
                    return std::vector<mpz_class>{};
            }
        }
        return ds;
    };
    auto dnum = divisors(a0, 512), dden = divisors(an, 512);
    for (const auto& dn : dnum) {
        for (const auto& dd : dden) {
            for (int s : {1, -1}) {
                Rational cand(s > 0 ? dn : mpz_class(-dn), dd);
                if (cand <= iv.lo || cand >= iv.hi)
                    continue;
                if (sf.eval(cand).is_zero()) {
                    res.exact = true;
                    res.value = cand;
                    return res;
                }
            }
        }
    }
    res.iv = iv;
    return res;
}

} // namespace refract
