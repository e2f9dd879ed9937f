#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace spincalc {

// Exact fraction over arbitrary-precision integers.
// Always stored in lowest terms with positive denominator; every operation
// is exact, there is no floating point anywhere downstream of this type.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit
    Rational(long n, long d);
    Rational(mpz_class n, mpz_class d);

    // Accepts "p", "-p", "p/q" with optional surrounding spaces.
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws CalcError on zero divisor

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    Rational pow(unsigned k) const;
    Rational inverse() const;  // throws CalcError on zero

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

private:
    void normalize();

    mpz_class num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational frac(long n, long d) { return Rational(n, d); }

}  // namespace spincalc
