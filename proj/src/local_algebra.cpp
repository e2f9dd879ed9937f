#include "spincalc/local_algebra.hpp"

#include <algorithm>

#include "spincalc/error.hpp"

namespace spincalc {

LocalAlgebra::LocalAlgebra(int cap) : desc_(std::make_shared<Desc>()) {
    if (cap < 0) throw CalcError("negative algebra cap");
    desc_->cap = cap;
}

int LocalAlgebra::add_generator(const std::string& name, int degree) {
    if (degree <= 0) throw CalcError("generator degree must be positive");
    desc_->names.push_back(name);
    desc_->degrees.push_back(degree);
    return int(desc_->names.size()) - 1;
}

int LocalAlgebra::cap() const { return desc_->cap; }
int LocalAlgebra::generator_count() const { return int(desc_->names.size()); }
const std::string& LocalAlgebra::generator_name(int idx) const { return desc_->names.at(idx); }
int LocalAlgebra::generator_degree(int idx) const { return desc_->degrees.at(idx); }

int LocalAlgebra::mono_degree(const Mono& m) const {
    int d = 0;
    for (int g : m) d += desc_->degrees.at(g);
    return d;
}

LocalAlgebra::Element LocalAlgebra::zero() const {
    Element e;
    e.desc_ = desc_;
    return e;
}

LocalAlgebra::Element LocalAlgebra::scalar(const LaurentPoly& c) const {
    Element e = zero();
    e.insert({}, c);
    return e;
}

LocalAlgebra::Element LocalAlgebra::gen(int idx) const {
    if (idx < 0 || idx >= generator_count()) throw CalcError("unknown generator");
    Element e = zero();
    if (desc_->degrees[idx] <= desc_->cap) e.insert({idx}, LaurentPoly(1));
    return e;
}

void LocalAlgebra::Element::insert(const Mono& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LocalAlgebra::Element::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

bool LocalAlgebra::Element::constant_term_is_zero() const { return coeff({}).is_zero(); }

LocalAlgebra::Element LocalAlgebra::Element::operator-() const {
    Element r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LocalAlgebra::Element& LocalAlgebra::Element::operator+=(const Element& o) {
    if (!desc_) desc_ = o.desc_;
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

LocalAlgebra::Element& LocalAlgebra::Element::operator-=(const Element& o) {
    return *this += -o;
}

LocalAlgebra::Element LocalAlgebra::Element::operator*(const Element& o) const {
    const auto desc = desc_ ? desc_ : o.desc_;
    if (desc_ && o.desc_ && desc_ != o.desc_)
        throw CalcError("elements of different local algebras");
    Element r;
    r.desc_ = desc;
    auto mono_degree = [&](const Mono& m) {
        int d = 0;
        for (int g : m) d += desc->degrees.at(g);
        return d;
    };
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            if (mono_degree(m) > desc->cap) continue;  // truncation
            r.insert(m, ca * cb);
        }
    return r;
}

LocalAlgebra::Element& LocalAlgebra::Element::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, cc] : terms_) cc *= c;
    return *this;
}

LocalAlgebra::Element LocalAlgebra::Element::pow(unsigned k) const {
    if (!desc_) throw CalcError("power of detached element");
    Element r;
    r.desc_ = desc_;
    r.insert({}, LaurentPoly(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string LocalAlgebra::Element::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        for (int g : m) out += "*" + (desc_ ? desc_->names.at(g) : std::to_string(g));
    }
    return out;
}

LocalAlgebra::Element geometric_inverse(const LaurentPoly& w,
                                        const LocalAlgebra::Element& n) {
    if (w.is_zero() || !w.is_monomial())
        throw CalcError("non-invertible weight: " + w.str());
    if (!n.constant_term_is_zero())
        throw CalcError("geometric_inverse needs a nilpotent with zero constant term");
    if (!n.desc_) throw CalcError("geometric_inverse needs an algebra-attached nilpotent");

    LaurentPoly winv = mono_inverse(w);
    LocalAlgebra::Element r;
    r.desc_ = n.desc_;
    LocalAlgebra::Element njw;  // n^j / w^{j+1}
    njw.desc_ = n.desc_;
    njw.insert({}, winv);
    while (!njw.is_zero()) {
        r += njw;
        njw = njw * n;
        njw *= winv;
    }
    return r;
}

}  // namespace spincalc
