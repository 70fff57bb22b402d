#pragma once

#include <string>
#include <utility>
#include <vector>

#include "refract/rational.hpp"

namespace refract {

enum class Var : unsigned char { x, z, h };

const char* var_name(Var v);

// Dense univariate polynomial over the rationals, tagged with its variable.
// Coefficients are stored lowest degree first; the representation never
// carries a zero leading coefficient (the zero polynomial is the empty list).
class UniPoly {
  public:
    explicit UniPoly(Var v = Var::x) : var_(v) {}
    UniPoly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& r, Var v = Var::x);
    static UniPoly monomial(Var v, int deg, const Rational& coeff = Rational(1));

    Var var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& coeff(int i) const;
    Rational lead() const { return is_zero() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly retag(Var v) const { return UniPoly(v, c_); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    UniPoly derivative() const;
    Rational eval(const Rational& p) const;
    double eval_double(double p) const;
    std::vector<double> coeffs_double() const;

    // p(g): substitution of g for the variable; the result carries g's tag.
    UniPoly compose(const UniPoly& g) const;

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly exact_div(const UniPoly& d) const; // throws NonExactDivision
    UniPoly monic() const;
    UniPoly pow(unsigned e) const;

    // Multiplicity of the root at point a (0 if p(a) != 0), and deflation.
    int root_multiplicity(const Rational& a) const;
    UniPoly deflate(const Rational& a, int times) const;

    // Order of vanishing at 0 (index of lowest nonzero coefficient).
    int ord0() const;

    // p = content * primitive where primitive has coprime integer
    // coefficients and positive leading coefficient; content carries sign.
    std::pair<Rational, UniPoly> primitive_parts() const;

    std::string str() const;

  private:
    void trim();

    Var var_;
    std::vector<Rational> c_;
};

UniPoly operator*(const Rational& s, const UniPoly& p);

// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

} // namespace refract
