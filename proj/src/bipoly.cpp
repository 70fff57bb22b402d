#include "refract/bipoly.hpp"

#include <sstream>

namespace refract {

namespace {

void check_vars(const BiPoly& a, const BiPoly& b) {
    if (a.is_constant() || b.is_constant())
        return;
    if (a.var1() != b.var1() || a.var2() != b.var2())
        throw VariableMismatch("bivariate operands have different variables");
}

} // namespace

BiPoly BiPoly::constant(const Rational& r, Var v1, Var v2) {
    BiPoly p(v1, v2);
    if (!r.is_zero())
        p.t_[{0, 0}] = r;
    return p;
}

BiPoly BiPoly::monomial(int i, int j, const Rational& c, Var v1, Var v2) {
    BiPoly p(v1, v2);
    if (!c.is_zero())
        p.t_[{i, j}] = c;
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, Var v1, Var v2) {
    BiPoly r(v1, v2);
    bool first = p.is_constant() || p.var() == v1;
    if (!first && p.var() != v2)
        throw VariableMismatch("embedding a polynomial in a foreign variable");
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeff(i);
        if (!c.is_zero())
            r.t_[first ? Key{i, 0} : Key{0, i}] = c;
    }
    return r;
}

int BiPoly::degree1() const {
    int d = -1;
    for (const auto& [k, c] : t_)
        d = std::max(d, k.first);
    return d;
}

int BiPoly::degree2() const {
    int d = -1;
    for (const auto& [k, c] : t_)
        d = std::max(d, k.second);
    return d;
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rational& c) {
    if (c.is_zero())
        return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
        t_[{i, j}] = c;
    } else {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r(v1_, v2_);
    for (const auto& [k, c] : t_)
        r.t_[k] = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    check_vars(*this, o);
    for (const auto& [k, c] : o.t_)
        add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    check_vars(*this, o);
    for (const auto& [k, c] : o.t_)
        add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    check_vars(a, b);
    BiPoly r(a.is_constant() && !b.is_constant() ? b.var1() : a.var1(),
             a.is_constant() && !b.is_constant() ? b.var2() : a.var2());
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
    BiPoly r(v1_, v2_);
    if (s.is_zero())
        return r;
    for (const auto& [k, c] : t_)
        r.t_[k] = c * s;
    return r;
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
    return p * s;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (!a.is_constant() && !b.is_constant() && (a.v1_ != b.v1_ || a.v2_ != b.v2_))
        return false;
    return a.t_ == b.t_;
}

BiPoly BiPoly::derivative(Var v) const {
    BiPoly r(v1_, v2_);
    bool first = (v == v1_);
    if (!first && v != v2_)
        throw VariableMismatch("derivative in a foreign variable");
    for (const auto& [k, c] : t_) {
        int e = first ? k.first : k.second;
        if (e == 0)
            continue;
        Key nk = first ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
        r.add_term(nk.first, nk.second, c * Rational(e));
    }
    return r;
}

Rational BiPoly::eval(const Rational& a, const Rational& b) const {
    Rational acc(0);
    for (const auto& [k, c] : t_)
        acc += c * a.pow(k.first) * b.pow(k.second);
    return acc;
}

double BiPoly::eval_double(double a, double b) const {
    // Horner in v2 per v1-power would be faster; sizes here are small.
    double acc = 0.0;
    for (const auto& [k, c] : t_) {
        double t = c.to_double();
        for (int i = 0; i < k.first; ++i)
            t *= a;
        for (int j = 0; j < k.second; ++j)
            t *= b;
        acc += t;
    }
    return acc;
}

std::vector<UniPoly> BiPoly::coeffs_in_v2() const {
    std::vector<UniPoly> cs(static_cast<size_t>(std::max(0, degree2() + 1)), UniPoly(v1_));
    std::vector<std::vector<Rational>> raw(cs.size());
    for (const auto& [k, c] : t_) {
        auto& row = raw[k.second];
        if (static_cast<int>(row.size()) <= k.first)
            row.resize(k.first + 1, Rational(0));
        row[k.first] = c;
    }
    for (size_t j = 0; j < cs.size(); ++j)
        cs[j] = UniPoly(v1_, raw[j]);
    return cs;
}

BiPoly BiPoly::from_coeffs_in_v2(const std::vector<UniPoly>& cs, Var v1, Var v2) {
    BiPoly r(v1, v2);
    for (size_t j = 0; j < cs.size(); ++j)
        for (int i = 0; i <= cs[j].degree(); ++i)
            r.add_term(i, static_cast<int>(j), cs[j].coeff(i));
    return r;
}

UniPoly BiPoly::substitute_v2(const Rational& val) const {
    UniPoly acc(v1_);
    for (const auto& [k, c] : t_)
        acc += UniPoly::monomial(v1_, k.first, c * val.pow(k.second));
    return acc;
}

UniPoly BiPoly::substitute_v2_linear(const Rational& a) const {
    UniPoly acc(v1_);
    for (const auto& [k, c] : t_)
        acc += UniPoly::monomial(v1_, k.first + k.second, c * a.pow(k.second));
    return acc;
}

UniPoly BiPoly::substitute_v1(const Rational& val) const {
    UniPoly acc(v2_);
    for (const auto& [k, c] : t_)
        acc += UniPoly::monomial(v2_, k.second, c * val.pow(k.first));
    return acc;
}

UniPoly BiPoly::content_v1() const {
    UniPoly g(v1_);
    for (const auto& cj : coeffs_in_v2())
        g = gcd_poly(g, cj);
    return g;
}

UniPoly BiPoly::content_v2() const {
    UniPoly g(v2_);
    std::map<int, std::vector<Rational>> rows;
    for (const auto& [k, c] : t_) {
        auto& row = rows[k.first];
        if (static_cast<int>(row.size()) <= k.second)
            row.resize(k.second + 1, Rational(0));
        row[k.second] = c;
    }
    for (auto& [i, row] : rows)
        g = gcd_poly(g, UniPoly(v2_, row));
    return g;
}

BiPoly BiPoly::divide_content_v1(const UniPoly& g) const {
    if (g.is_constant())
        return *this * g.lead().inv();
    auto cs = coeffs_in_v2();
    for (auto& c : cs)
        c = c.exact_div(g);
    return from_coeffs_in_v2(cs, v1_, v2_);
}

BiPoly BiPoly::divide_content_v2(const UniPoly& g) const {
    if (g.is_constant())
        return *this * g.lead().inv();
    std::map<int, std::vector<Rational>> rows;
    for (const auto& [k, c] : t_) {
        auto& row = rows[k.first];
        if (static_cast<int>(row.size()) <= k.second)
            row.resize(k.second + 1, Rational(0));
        row[k.second] = c;
    }
    BiPoly r(v1_, v2_);
    for (auto& [i, row] : rows) {
        UniPoly q = UniPoly(v2_, row).exact_div(g);
        for (int j = 0; j <= q.degree(); ++j)
            r.add_term(i, j, q.coeff(j));
    }
    return r;
}

std::pair<Rational, BiPoly> BiPoly::primitive_parts() const {
    if (is_zero())
        return {Rational(0), BiPoly(v1_, v2_)};
    Rational content(0);
    for (const auto& [k, c] : t_)
        content = rat_gcd(content, c);
    // sign from the lex(v1 > v2) leading term
    if (t_.rbegin()->second.sign() < 0)
        content = -content;
    return {content, *this * content.inv()};
}

std::pair<BiPoly, BiPoly> BiPoly::divmod_in_v2(const BiPoly& d) const {
    int dd = d.degree2();
    if (dd < 0)
        throw NonExactDivision("bivariate division by zero");
    auto dc = d.coeffs_in_v2();
    if (!dc.back().is_constant())
        throw NotReducible("divisor's leading coefficient must be constant");
    Rational lead = dc.back().lead();
    auto rc = coeffs_in_v2();
    std::vector<UniPoly> qc;
    int rd = static_cast<int>(rc.size()) - 1;
    if (rd >= dd)
        qc.assign(rd - dd + 1, UniPoly(v1_));
    while (rd >= dd) {
        if (!rc[rd].is_zero()) {
            UniPoly f = rc[rd] * lead.inv();
            qc[rd - dd] = f;
            for (int i = 0; i <= dd; ++i)
                rc[rd - dd + i] -= f * dc[i];
        }
        --rd;
        rc.pop_back();
    }
    return {from_coeffs_in_v2(qc, v1_, v2_), from_coeffs_in_v2(rc, v1_, v2_)};
}

std::string BiPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag.is_one() && (k.first > 0 || k.second > 0);
        if (!unit) {
            if (mag.is_integer())
                os << mag.num().get_str();
            else
                os << mag.num().get_str() << "/" << mag.den().get_str();
        }
        auto emit = [&](Var v, int e, bool lead_sym) {
            if (e == 0)
                return;
            if (!lead_sym)
                os << "*";
            os << var_name(v);
            if (e > 1)
                os << "^" << e;
        };
        emit(v1_, k.first, unit);
        emit(v2_, k.second, unit && k.first == 0);
    }
    return os.str();
}

} // namespace refract
