#pragma once

#include "refract/unipoly.hpp"

namespace refract {

// Univariate rational function, reduced (gcd cancelled) with a primitive
// positive-lead denominator.
class RatFunc {
  public:
    RatFunc() : num_(Var::x), den_(UniPoly::constant(Rational(1))) {}
    RatFunc(UniPoly num, UniPoly den);
    explicit RatFunc(const UniPoly& p) : RatFunc(p, UniPoly::constant(Rational(1), p.var())) {}
    static RatFunc constant(const Rational& r, Var v = Var::x);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    Var var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator*(const Rational& s) const;
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    RatFunc derivative() const;
    Rational eval(const Rational& p) const;   // throws DomainError on a pole
    double eval_double(double p) const;

    // order of vanishing at 0; poles at 0 give a negative order
    int ord0() const;

    std::string str() const;

  private:
    UniPoly num_, den_;
};

} // namespace refract
