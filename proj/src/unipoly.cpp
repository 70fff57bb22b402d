#include "refract/unipoly.hpp"

#include <sstream>

namespace refract {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::z: return "z";
        case Var::h: return "h";
    }
    return "?";
}

namespace {

// Arithmetic between a constant and anything is always allowed; otherwise
// the tags must agree.
Var join_vars(const UniPoly& a, const UniPoly& b) {
    if (a.var() == b.var())
        return a.var();
    if (a.is_constant())
        return b.var();
    if (b.is_constant())
        return a.var();
    throw VariableMismatch(std::string("mixing variables ") + var_name(a.var()) + " and " +
                           var_name(b.var()));
}

} // namespace

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& r, Var v) {
    UniPoly p(v);
    if (!r.is_zero())
        p.c_.push_back(r);
    return p;
}

UniPoly UniPoly::monomial(Var v, int deg, const Rational& coeff) {
    UniPoly p(v);
    if (!coeff.is_zero()) {
        p.c_.assign(deg + 1, Rational(0));
        p.c_[deg] = coeff;
    }
    return p;
}

const Rational& UniPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return zero;
    return c_[i];
}

UniPoly UniPoly::operator-() const {
    UniPoly r(var_);
    r.c_.reserve(c_.size());
    for (const auto& a : c_)
        r.c_.push_back(-a);
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    var_ = join_vars(*this, o);
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    var_ = join_vars(*this, o);
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    Var v = join_vars(a, b);
    if (a.is_zero() || b.is_zero())
        return UniPoly(v);
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(v, std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero())
        return UniPoly(var_);
    UniPoly r(var_);
    r.c_.reserve(c_.size());
    for (const auto& a : c_)
        r.c_.push_back(a * s);
    return r;
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    return p * s;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size())
        return false;
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
        return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i])
            return false;
    return true;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1)
        return UniPoly(var_);
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(var_, std::move(d));
}

Rational UniPoly::eval(const Rational& p) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * p + c_[i];
    return acc;
}

double UniPoly::eval_double(double p) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * p + c_[i].to_double();
    return acc;
}

std::vector<double> UniPoly::coeffs_double() const {
    std::vector<double> d;
    d.reserve(c_.size());
    for (const auto& a : c_)
        d.push_back(a.to_double());
    return d;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
    UniPoly acc(g.var());
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * g;
        acc += UniPoly::constant(c_[i], g.var());
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero())
        throw NonExactDivision("division by zero polynomial");
    Var v = join_vars(*this, d);
    UniPoly q(v), r = *this;
    r.var_ = v;
    if (r.degree() < d.degree())
        return {q, r};
    q.c_.assign(r.degree() - d.degree() + 1, Rational(0));
    Rational dl = d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational f = r.lead() / dl;
        q.c_[k] = f;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[k + i] -= f * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero())
        throw NonExactDivision("nonzero remainder in exact division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero())
        return *this;
    return *this * lead().inv();
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = UniPoly::constant(Rational(1), var_);
    UniPoly base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int UniPoly::root_multiplicity(const Rational& a) const {
    if (is_zero())
        return 0;
    UniPoly p = *this;
    UniPoly lin(var_, {-a, Rational(1)});
    int m = 0;
    while (!p.is_zero() && p.eval(a).is_zero()) {
        p = p.exact_div(lin);
        ++m;
    }
    return m;
}

UniPoly UniPoly::deflate(const Rational& a, int times) const {
    UniPoly p = *this;
    UniPoly lin(var_, {-a, Rational(1)});
    for (int i = 0; i < times; ++i)
        p = p.exact_div(lin);
    return p;
}

int UniPoly::ord0() const {
    if (is_zero())
        return -1;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

std::pair<Rational, UniPoly> UniPoly::primitive_parts() const {
    if (is_zero())
        return {Rational(0), UniPoly(var_)};
    Rational content(0);
    for (const auto& a : c_)
        content = rat_gcd(content, a);
    if (lead().sign() < 0)
        content = -content;
    UniPoly prim = *this * content.inv();
    return {content, prim};
}

std::string UniPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a.is_zero())
            continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag.is_one() && i > 0;
        if (!unit) {
            if (mag.is_integer())
                os << mag.num().get_str();
            else
                os << mag.num().get_str() << "/" << mag.den().get_str();
        }
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var_name(var_);
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b) {
    if (a.var() != b.var() && !a.is_constant() && !b.is_constant())
        throw VariableMismatch("gcd of polynomials in different variables");
    UniPoly p = a, q = b;
    if (p.is_zero())
        return q.monic();
    if (q.is_zero())
        return p.monic();
    // keep remainders primitive to limit coefficient growth
    while (!q.is_zero()) {
        UniPoly r = p.divmod(q).second;
        if (!r.is_zero())
            r = r.primitive_parts().second;
        p = q;
        q = r;
    }
    return p.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero())
        return p;
    UniPoly g = gcd_poly(p, p.derivative());
    return p.exact_div(g).monic();
}

} // namespace refract
