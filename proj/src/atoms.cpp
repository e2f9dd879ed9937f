#include "spincalc/atoms.hpp"

#include <array>

#include "spincalc/error.hpp"

namespace spincalc {

const std::string& atom_name(Atom a) {
    static const std::array<std::string, 6> names = {
        "THETA", "I_CH1", "I_PSI_SPIN11", "I_G0_112", "HODGE_LAMBDA1", "PSI_M11"};
    return names.at(size_t(a));
}

AtomCombo AtomCombo::atom(Atom a, const LaurentPoly& coeff) {
    AtomCombo c;
    if (!coeff.is_zero()) c.terms_[a] = coeff;
    return c;
}

LaurentPoly AtomCombo::atom_coeff(Atom a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

AtomCombo AtomCombo::operator-() const {
    AtomCombo r;
    r.constant_ = -constant_;
    for (const auto& [a, c] : terms_) r.terms_[a] = -c;
    return r;
}

AtomCombo& AtomCombo::operator+=(const AtomCombo& o) {
    constant_ += o.constant_;
    for (const auto& [a, c] : o.terms_) {
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_[a] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

AtomCombo& AtomCombo::operator-=(const AtomCombo& o) { return *this += -o; }

AtomCombo& AtomCombo::operator*=(const LaurentPoly& c) {
    constant_ *= c;
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, cc] : terms_) cc *= c;
    return *this;
}

AtomCombo AtomCombo::operator*(const AtomCombo& o) const {
    if (!terms_.empty() && !o.terms_.empty())
        throw CalcError("nonlinear atom product: " + str() + " times " + o.str());
    if (terms_.empty()) {
        AtomCombo r = o;
        r *= constant_;
        return r;
    }
    AtomCombo r = *this;
    r *= o.constant_;
    return r;
}

AtomCombo AtomCombo::coeff_t(int k) const {
    AtomCombo r;
    r.constant_ = LaurentPoly(constant_.coeff(k));
    for (const auto& [a, c] : terms_) {
        Rational ck = c.coeff(k);
        if (!ck.is_zero()) r.terms_[a] = LaurentPoly(ck);
    }
    return r;
}

AtomCombo AtomCombo::substitute(Atom a, const Rational& value) const {
    auto it = terms_.find(a);
    if (it == terms_.end()) return *this;
    AtomCombo r = *this;
    r.constant_ += it->second * LaurentPoly(value);
    r.terms_.erase(a);
    return r;
}

Rational AtomCombo::rational() const {
    if (!terms_.empty()) throw CalcError("unresolved atoms: " + str());
    for (const auto& [k, c] : constant_.terms())
        if (k != 0) throw CalcError("non-scalar Laurent value: " + constant_.str());
    return constant_.coeff(0);
}

std::string AtomCombo::str() const {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    };
    if (!constant_.is_zero()) append(constant_.str());
    for (const auto& [a, c] : terms_) {
        if (c.is_monomial() && c.mono_exp() == 0) {
            const Rational& q = c.mono_coeff();
            if (q.is_one())
                append(atom_name(a));
            else if ((-q).is_one())
                append("-" + atom_name(a));
            else
                append(q.str() + "*" + atom_name(a));
        } else {
            append("(" + c.str() + ")*" + atom_name(a));
        }
    }
    return out.empty() ? "0" : out;
}

const AtomTable& AtomTable::standard() {
    static const AtomTable table = [] {
        AtomTable t;
        t.hodge_lambda1 = frac(1, 24);
        t.psi_m11 = frac(1, 24);
        t.i_g0_112 = frac(1, 3);
        t.psi_spin11_trivial_part = frac(-8, 9 * 24);
        t.psi_spin11_nontrivial_part = frac(8, 9 * 24);
        return t;
    }();
    return table;
}

}  // namespace spincalc
