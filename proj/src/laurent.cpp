#include "spincalc/laurent.hpp"

#include "spincalc/error.hpp"

namespace spincalc {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) c_[0] = c;
}

LaurentPoly LaurentPoly::t(int k) { return mono(Rational(1), k); }

LaurentPoly LaurentPoly::mono(const Rational& c, int k) {
    LaurentPoly p;
    if (!c.is_zero()) p.c_[k] = c;
    return p;
}

Rational LaurentPoly::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
}

int LaurentPoly::mono_exp() const {
    if (!is_monomial()) throw CalcError("non-invertible weight: " + str());
    return c_.begin()->first;
}

const Rational& LaurentPoly::mono_coeff() const {
    if (!is_monomial()) throw CalcError("non-invertible weight: " + str());
    return c_.begin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : c_) r.c_[k] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.c_) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ka, ca] : c_)
        for (const auto& [kb, cb] : o.c_) {
            Rational prod = ca * cb;
            auto it = r.c_.find(ka + kb);
            if (it == r.c_.end()) {
                if (!prod.is_zero()) r.c_[ka + kb] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(Rational(1));
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

LaurentPoly mono_inverse(const LaurentPoly& w) {
    if (w.is_zero() || !w.is_monomial())
        throw CalcError("non-invertible weight: " + w.str());
    return LaurentPoly::mono(w.mono_coeff().inverse(), -w.mono_exp());
}

LaurentPoly LaurentPoly::div_mono(const LaurentPoly& w) const { return *this * mono_inverse(w); }

LaurentPoly LaurentPoly::rescale_t(const Rational& s) const {
    if (s.is_zero()) throw CalcError("rescale by zero");
    LaurentPoly r;
    for (const auto& [k, c] : c_) {
        Rational sk = k >= 0 ? s.pow(unsigned(k)) : s.inverse().pow(unsigned(-k));
        r.c_[k] = c * sk;
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : c_) {
        std::string coeff = c.str();
        if (!first) {
            if (coeff[0] == '-') {
                out += " - ";
                coeff = coeff.substr(1);
            } else {
                out += " + ";
            }
        }
        first = false;
        if (k == 0) {
            out += coeff;
        } else {
            std::string tp = k == 1 ? "t" : "t^" + std::to_string(k);
            out += (coeff == "1" ? tp : coeff == "-1" ? "-" + tp : coeff + "*" + tp);
        }
    }
    return out;
}

}  // namespace spincalc
