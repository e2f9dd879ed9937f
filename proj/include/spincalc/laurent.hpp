#pragma once

#include <map>
#include <string>

#include "spincalc/rational.hpp"

namespace spincalc {

// Sparse Laurent polynomial in the equivariant parameter t.
// Exponents are arbitrary integers; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: implicit constant
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly t(int k = 1);
    static LaurentPoly mono(const Rational& c, int k);

    Rational coeff(int k) const;
    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    // Degree and coefficient of the unique term; requires is_monomial().
    int mono_exp() const;
    const Rational& mono_coeff() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(unsigned k) const;

    // Exact division by a single-term unit c*t^k; throws "non-invertible weight"
    // when the divisor is zero or has more than one term.
    LaurentPoly div_mono(const LaurentPoly& w) const;

    // Formal substitution t -> s*t; s must be nonzero.
    LaurentPoly rescale_t(const Rational& s) const;

    const std::map<int, Rational>& terms() const { return c_; }

    std::string str() const;

private:
    std::map<int, Rational> c_;
};

// Inverse of a single-term unit.
LaurentPoly mono_inverse(const LaurentPoly& w);

}  // namespace spincalc
