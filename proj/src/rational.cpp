#include "spincalc/rational.hpp"

#include <ostream>

#include "spincalc/error.hpp"

namespace spincalc {

Rational::Rational(long n, long d) : num_(n), den_(d) { normalize(); }

Rational::Rational(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) throw CalcError("rational with zero denominator");
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& s) {
    auto trim = [](std::string t) {
        const char* ws = " \t";
        auto b = t.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        auto e = t.find_last_not_of(ws);
        return t.substr(b, e - b + 1);
    };
    std::string body = trim(s);
    if (body.empty()) throw CalcError("empty fraction string");
    auto slash = body.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(body), 1);
        mpz_class n(trim(body.substr(0, slash)));
        mpz_class d(trim(body.substr(slash + 1)));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw CalcError("bad fraction string: \"" + s + "\"");
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw CalcError("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

Rational Rational::pow(unsigned k) const {
    Rational r(1);
    Rational base = *this;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw CalcError("inverse of zero");
    return Rational(den_, num_);
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace spincalc
