#include "refract/resultant.hpp"

namespace refract {

UniPoly resultant_v2(const BiPoly& a, const BiPoly& b) {
    int m = a.degree2(), n = b.degree2();
    if (m < 1 || n < 1)
        throw NotEliminable("resultant needs positive degree in the eliminated variable");
    Var vx = a.var1();

    // pull out rational contents first; Res(ca*A, cb*B) = ca^n * cb^m * Res(A, B)
    auto [ca, A] = a.primitive_parts();
    auto [cb, B] = b.primitive_parts();
    Rational scale = ca.pow(n) * cb.pow(m);

    auto ac = A.coeffs_in_v2(); // size m+1, entries UniPoly in v1
    auto bc = B.coeffs_in_v2();

    const int N = m + n;
    std::vector<std::vector<UniPoly>> S(N, std::vector<UniPoly>(N, UniPoly(vx)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            S[r][r + (m - k)] = ac[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            S[n + r][r + (n - k)] = bc[k];

    // Bareiss: divisions are exact over Q[v1]
    UniPoly prev = UniPoly::constant(Rational(1), vx);
    int sign = 1;
    for (int k = 0; k + 1 < N; ++k) {
        if (S[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (!S[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                return UniPoly(vx); // singular: resultant vanishes identically
            std::swap(S[k], S[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                S[i][j] = (S[k][k] * S[i][j] - S[i][k] * S[k][j]).exact_div(prev);
            S[i][k] = UniPoly(vx);
        }
        prev = S[k][k];
    }
    UniPoly res = S[N - 1][N - 1] * scale;
    if (sign < 0)
        res = -res;
    return res;
}

BiPoly gcd_in_v2(const BiPoly& a, const BiPoly& b) {
    // Euclidean remainder sequence in v2 over Q(v1), with contents stripped
    // at every step so coefficients stay polynomial.
    auto strip = [](const BiPoly& p) {
        if (p.is_zero())
            return p;
        UniPoly c1 = p.content_v1();
        BiPoly q = c1.is_constant() ? p : p.divide_content_v1(c1);
        return q.primitive_parts().second;
    };
    BiPoly P = strip(a), Q = strip(b);
    if (P.degree2() < Q.degree2())
        std::swap(P, Q);
    while (!Q.is_zero() && Q.degree2() > 0) {
        // pseudo-remainder by multiply-and-subtract; scaling is irrelevant
        // because contents are stripped each round
        auto qc = Q.coeffs_in_v2();
        UniPoly lc = qc.back();
        int dq = Q.degree2();
        auto rc = P.coeffs_in_v2();
        while (static_cast<int>(rc.size()) - 1 >= dq && !rc.empty()) {
            int rd = static_cast<int>(rc.size()) - 1;
            if (rc[rd].is_zero()) {
                rc.pop_back();
                continue;
            }
            UniPoly top = rc[rd];
            for (auto& c : rc)
                c = c * lc;
            for (int i = 0; i <= dq; ++i)
                rc[rd - dq + i] -= top * qc[i];
            rc.pop_back();
        }
        BiPoly rem = BiPoly::from_coeffs_in_v2(rc, P.var1(), P.var2());
        P = Q;
        Q = strip(rem);
    }
    if (Q.is_zero())
        return strip(P);
    return BiPoly::constant(Rational(1), a.var1(), a.var2()); // coprime in v2
}

} // namespace refract
