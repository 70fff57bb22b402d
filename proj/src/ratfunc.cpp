#include "refract/ratfunc.hpp"

namespace refract {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw NonExactDivision("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rational(1), den_.var());
        return;
    }
    UniPoly g = gcd_poly(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    auto [c, prim] = den_.primitive_parts();
    den_ = prim;
    num_ = num_ * c.inv();
}

RatFunc RatFunc::constant(const Rational& r, Var v) {
    return RatFunc(UniPoly::constant(r, v));
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero())
        throw NonExactDivision("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator*(const Rational& s) const {
    return RatFunc(num_ * s, den_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::eval(const Rational& p) const {
    Rational d = den_.eval(p);
    if (d.is_zero())
        throw DomainError("rational function evaluated at a pole");
    return num_.eval(p) / d;
}

double RatFunc::eval_double(double p) const {
    return num_.eval_double(p) / den_.eval_double(p);
}

int RatFunc::ord0() const {
    if (num_.is_zero())
        return 0;
    return num_.ord0() - den_.ord0();
}

std::string RatFunc::str() const {
    if (is_polynomial())
        return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace refract
