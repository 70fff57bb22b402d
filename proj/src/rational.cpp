#include "refract/rational.hpp"

#include <cctype>
#include <ostream>

namespace refract {

Rational::Rational(long n, long d) {
    if (d == 0)
        throw ParseError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0)
        throw ParseError("rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw NonExactDivision("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    auto check_int = [](const std::string& t) {
        if (t.empty())
            return false;
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    auto slash = t.find('/');
    std::string ns = (slash == std::string::npos) ? t : t.substr(0, slash);
    std::string ds = (slash == std::string::npos) ? "1" : t.substr(slash + 1);
    if (!check_int(ns) || !check_int(ds))
        throw ParseError("malformed rational: '" + s + "'");
    mpz_class n(ns), d(ds);
    if (d == 0)
        throw ParseError("zero denominator in rational: '" + s + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inv() const {
    if (is_zero())
        throw NonExactDivision("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    Rational base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    Rational acc(1);
    while (n) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Rational rat_gcd(const Rational& a, const Rational& b) {
    mpz_class gn, lc;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(lc.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    if (gn == 0)
        return Rational(0);
    return Rational(gn, lc);
}

bool exact_root(const Rational& a, unsigned long k, Rational& out) {
    if (k == 0)
        return false;
    if (a.sign() < 0 && k % 2 == 0)
        return false;
    mpz_class n = a.num(), d = a.den(), rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k);
    if (!exact_n || !exact_d)
        return false;
    out = Rational(rn, rd);
    return true;
}

} // namespace refract
