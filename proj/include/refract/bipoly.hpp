#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "refract/unipoly.hpp"

namespace refract {

// Sparse bivariate polynomial over the rationals. The two variable tags
// default to (x, z); the melnikov reduction also uses (x, h). No zero
// coefficients are ever stored.
class BiPoly {
  public:
    using Key = std::pair<int, int>; // (exponent of v1, exponent of v2)

    explicit BiPoly(Var v1 = Var::x, Var v2 = Var::z) : v1_(v1), v2_(v2) {}

    static BiPoly constant(const Rational& r, Var v1 = Var::x, Var v2 = Var::z);
    static BiPoly monomial(int i, int j, const Rational& c, Var v1 = Var::x, Var v2 = Var::z);
    // embed a univariate polynomial; its tag must equal v1 or v2
    static BiPoly from_unipoly(const UniPoly& p, Var v1 = Var::x, Var v2 = Var::z);

    Var var1() const { return v1_; }
    Var var2() const { return v2_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0}); }
    int degree1() const;
    int degree2() const;

    const std::map<Key, Rational>& terms() const { return t_; }
    Rational coeff(int i, int j) const;
    void add_term(int i, int j, const Rational& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator*(const Rational& s) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b);

    BiPoly derivative(Var v) const;
    Rational eval(const Rational& a, const Rational& b) const;
    double eval_double(double a, double b) const;

    // view as a polynomial in v2 with UniPoly-in-v1 coefficients
    std::vector<UniPoly> coeffs_in_v2() const;
    static BiPoly from_coeffs_in_v2(const std::vector<UniPoly>& cs, Var v1, Var v2);

    UniPoly substitute_v2(const Rational& val) const;       // v2 := val
    UniPoly substitute_v2_linear(const Rational& a) const;  // v2 := a*v1
    UniPoly substitute_v1(const Rational& val) const;       // v1 := val

    // gcd of the v1-coefficient polynomials (monic UniPoly in v1), i.e. the
    // content when the polynomial is read in Q[v1][v2]; and symmetrically.
    UniPoly content_v1() const;
    UniPoly content_v2() const;
    BiPoly divide_content_v1(const UniPoly& g) const; // exact division of each coefficient
    BiPoly divide_content_v2(const UniPoly& g) const;

    // p = content * primitive, primitive with coprime integer coefficients
    // and positive leading coefficient under lex(v1 > v2).
    std::pair<Rational, BiPoly> primitive_parts() const;

    // ordinary division by d viewed in v2; requires the leading
    // v2-coefficient of d to be a nonzero constant
    std::pair<BiPoly, BiPoly> divmod_in_v2(const BiPoly& d) const;

    std::string str() const;

  private:
    Var v1_, v2_;
    std::map<Key, Rational> t_;
};

BiPoly operator*(const Rational& s, const BiPoly& p);

} // namespace refract
